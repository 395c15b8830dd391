"""Brute-force reference counters, deliberately independent of the library's
search code.

Everything here enumerates raw subsets or injections with itertools and
checks definitions directly, so a bug in the backtracking engines cannot
hide behind itself.  Only usable at tiny sizes; that is the point.
"""

import itertools


def no_three_collinear(plane, points) -> bool:
    for a, b, c in itertools.combinations(points, 3):
        li = plane.line_through(a, b)
        if c in plane.line_points[li]:
            return False
    return True


def count_arcs_brute(plane, n: int) -> int:
    return sum(
        1
        for subset in itertools.combinations(range(plane.num_points), n)
        if no_three_collinear(plane, subset)
    )


def is_subplane_brute(plane, points, n: int) -> bool:
    """Definition check: each joining line meets the set in exactly n+1
    points (which forces a 2-design, hence a subplane, at these sizes)."""
    pset = set(points)
    for a, b in itertools.combinations(points, 2):
        row = plane.line_points[plane.line_through(a, b)]
        if sum(1 for p in row if p in pset) != n + 1:
            return False
    return True


def count_subplanes_brute(plane, n: int) -> int:
    size = n * n + n + 1
    return sum(
        1
        for subset in itertools.combinations(range(plane.num_points), size)
        if is_subplane_brute(plane, subset, n)
    )


def _valid_labeled(plane, edges, assignment) -> bool:
    lines = []
    for u, v in edges:
        li = plane.line_through(assignment[u], assignment[v])
        if li in lines:
            return False
        lines.append(li)
    return True


def count_labeled_embeddings_brute(plane, num_vertices: int, edges) -> int:
    """Number of injective vertex->point maps whose induced edge->line map is
    also injective.  Tries every single injection; keep the sizes tiny."""
    edges = [tuple(e) for e in edges]
    return sum(
        1
        for assignment in itertools.permutations(range(plane.num_points), num_vertices)
        if _valid_labeled(plane, edges, assignment)
    )


def image_keys_brute(plane, num_vertices: int, edges):
    """Set of image keys (point set, line set, induced incidence) over all
    valid labeled embeddings."""
    edges = [tuple(e) for e in edges]
    keys = set()
    for assignment in itertools.permutations(range(plane.num_points), num_vertices):
        lines = []
        ok = True
        for u, v in edges:
            li = plane.line_through(assignment[u], assignment[v])
            if li in lines:
                ok = False
                break
            lines.append(li)
        if not ok:
            continue
        incidence = frozenset(
            pair
            for (u, v), li in zip(edges, lines)
            for pair in ((assignment[u], li), (assignment[v], li))
        )
        keys.add((tuple(sorted(assignment)), tuple(sorted(lines)), incidence))
    return keys


def count_automorphisms_brute(num_vertices: int, edges) -> int:
    """Count vertex permutations that map the edge set onto itself."""
    edge_set = {(min(u, v), max(u, v)) for u, v in edges}
    count = 0
    for perm in itertools.permutations(range(num_vertices)):
        mapped = {(min(perm[u], perm[v]), max(perm[u], perm[v])) for u, v in edge_set}
        if mapped == edge_set:
            count += 1
    return count
