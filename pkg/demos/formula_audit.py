"""Audit the counting formulas against brute-force censuses.

Every closed-form count the library knows is recomputed here by exhaustive
search on the small planes, together with the embeddability frontier: which
families fit at all, and which are ruled out by degree or arc obstructions.
"""

from pgembed import (
    checks_for_census,
    embeddability_verdict,
    enumerate_embeddings,
    make_family,
    plane_of_order,
)

AUDIT = (
    ("complete_bipartite", (2, 2), 2),
    ("complete_bipartite", (3, 3), 3),
    ("complete_bipartite", (2, 3), 3),
    ("star", (2,), 2),
    ("star", (3,), 3),
    ("complete", (3,), 2),
    ("cycle", (4,), 2),
)

FRONTIER = (
    ("complete", (4,), 2),
    ("complete", (5,), 3),
    ("complete", (6,), 4),
    ("complete_bipartite", (2, 4), 3),
    ("star", (5,), 4),
    ("cycle", (9,), 2),
)


def main() -> None:
    print("formula audit (match: True = census equals prediction,")
    print("               False = prediction's assumption fails here,")
    print("               None = predicate or prediction out of range)\n")
    for kind, params, q in AUDIT:
        graph = make_family(kind, *params)
        plane = plane_of_order(q)
        rep = enumerate_embeddings(graph, plane, mode="count")
        print(f"{graph.label:8s} in {plane.label()}:  N={rep.N}  n={rep.n}")
        for check in checks_for_census(graph, q, rep.n, rep.N):
            print(f"    {check['formula']} value={check['value']} "
                  f"match={check['matches']}  [{check['status']}]")

    print("\nembeddability frontier:")
    for kind, params, q in FRONTIER:
        graph = make_family(kind, *params)
        verdict = embeddability_verdict(graph, q)
        print(f"  {graph.label:8s} at q={q}: {verdict.status:22s} "
              f"{verdict.reason}")


if __name__ == "__main__":
    main()
