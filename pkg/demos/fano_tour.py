"""Tour of the smallest projective plane.

Builds PG(2,2) from GF(2), verifies the plane axioms, runs exact censuses
of the small graph families, and shows the Singer-cycle orbit structure
that forces every census to be a multiple of seven.
"""

from pgembed import (
    enumerate_embeddings,
    field_make,
    find_arcs,
    make_family,
    pg2,
    singer_orbit_check,
    verify_axioms,
)


def main() -> None:
    plane = pg2(field_make(2))
    print(f"built {plane.label()}: {plane.num_points} points, "
          f"{plane.num_lines} lines, {plane.q + 1} points per line")
    for line in verify_axioms(plane).summary_lines():
        print(" ", line)

    print("\ncensuses (N = labeled embeddings, n = images):")
    for kind, params in (("complete", (3,)), ("complete", (4,)),
                         ("complete_bipartite", (2, 2)), ("cycle", (4,)),
                         ("cycle", (5,)), ("star", (3,))):
        graph = make_family(kind, *params)
        rep = enumerate_embeddings(graph, plane, mode="list")
        orbits = singer_orbit_check(graph, plane, rep.images)
        print(f"  {graph.label:8s} N={rep.N:5d}  n={rep.n:4d}  "
              f"|Aut|={rep.aut:3d}  Singer orbit sizes {orbits.orbit_sizes}")

    print("\ncomplete-graph images are exactly the arcs:")
    for n in (3, 4):
        arcs = find_arcs(plane, n).count
        images = enumerate_embeddings(make_family("complete", n), plane).n
        print(f"  {n}-arcs: {arcs:3d}   K_{n} images: {images:3d}")
    print("  (the 7 hyperovals of PG(2,2) are its 7 quadrilaterals)")


if __name__ == "__main__":
    main()
