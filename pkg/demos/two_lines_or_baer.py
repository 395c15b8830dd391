"""Two lines or a Baer subplane: the classification of bipartite images.

When a complete bipartite image has a small class of n points and the
plane order satisfies q > n^2, the whole image is forced onto two lines.
At the square boundary q = n^2 a second kind of image appears, its big
class spread across a Baer subplane.  PG(2,4) with n = 2 is the smallest
plane where both kinds coexist, and K_{2,4} splits exactly in half.
"""

from pgembed import (
    baer_intersection_stats,
    enumerate_embeddings,
    find_subplanes,
    make_family,
    plane_of_order,
    predict,
)


def main() -> None:
    plane = plane_of_order(4)
    graph = make_family("complete_bipartite", 2, 4)
    rep = enumerate_embeddings(graph, plane, mode="list")
    two_line = rep.classification["two_lines"]
    tallies = rep.classification["class_status"]
    print(f"{graph.label} in {plane.label()}: {rep.n} images")
    print(f"  on two lines: {two_line}   class-status tallies: {tallies}")
    print(f"  two-line prediction 2*C(21,2)*C(4,2) = "
          f"{predict('F3', q=4, n=2).value}")

    subs = find_subplanes(plane, 2, mode="list")
    print(f"\n{plane.label()} carries {subs.count} subplanes of order 2"
          f" (Baer: {subs.witnesses[0].is_baer})")
    rep44 = enumerate_embeddings(make_family("complete_bipartite", 4, 4),
                                 plane, mode="list")
    stats_range = set()
    for img in rep44.images:
        st = baer_intersection_stats(img, plane, subs.witnesses)
        stats_range.add((st.max_points, st.min_edge_lines))
    print(f"  each of the {rep44.n} K_{{4,4}} images against all "
          f"{subs.count} witnesses -- extremes of")
    print("  (max points inside a witness, min edge lines shared with it): "
          f"{sorted(stats_range)}")
    print("  the proved bounds are <= 4 points and >= 2 shared edge lines; "
          "at q = 4 every image lands exactly on (4, 4)")

    plane5 = plane_of_order(5)
    rep5 = enumerate_embeddings(make_family("complete_bipartite", 3, 5),
                                plane5, mode="list")
    print(f"\nK_{{3,5}} in {plane5.label()}: {rep5.n} images, "
          f"{rep5.classification['two_lines']} on two lines "
          f"(prediction {predict('F5', q=5).value})")
    print("  for q >= 5 every K_{q-2,q} image lies on two lines; the "
          "census at q=5 confirms it with zero exceptions")


if __name__ == "__main__":
    main()
