"""Executable verification suites for the counting and structure theorems.

Each suite replays one theorem as concrete assertions over chosen plane
orders and returns a CheckResult per assertion, carrying a serialized
counterexample on failure.  Suites are pure functions of the order list;
all enumeration is exact, so a FAIL is a genuine violation (or an engine
bug), never noise.
"""

import dataclasses
import math

from .embed import (
    baer_intersection_stats,
    double_star_construct,
    enumerate_embeddings,
    singer_orbit_check,
    subplane_class_construct,
    two_line_construct,
)
from .formulas import predict
from .galois import field_make
from .graph import make_family
from .plane import find_arcs, find_subplanes, pg2


@dataclasses.dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    details: str = ""
    counterexample: dict | None = None


_plane_cache: dict = {}


def plane_of_order(q: int):
    """Classical plane of prime-power order q, cached per process."""
    if q not in _plane_cache:
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        p = next(f for f in range(2, q + 1) if q % f == 0)  # least factor: prime
        base, k = q, 0
        while base % p == 0:
            base //= p
            k += 1
        if base != 1:
            raise ValueError(f"{q} is not a prime power")
        _plane_cache[q] = pg2(field_make(p, k))
    return _plane_cache[q]


def _result(suite, name, passed, details="", counterexample=None):
    return CheckResult(suite, name, bool(passed), details,
                       None if passed else counterexample)


# -- NEQ-NAUT: labeled count = image count * |Aut| -----------------------------


def _census_battery(q: int):
    graphs = [
        make_family("complete", 3),
        make_family("complete", 4),
        make_family("cycle", 4),
        make_family("cycle", 5),
        make_family("star", 2),
        make_family("star", q + 1),
        make_family("complete_bipartite", 2, 2),
        make_family("complete_bipartite", q - 1, q),
        make_family("complete_bipartite", q, q),
    ]
    seen = set()
    unique = []
    for g in graphs:
        if g.label not in seen:
            seen.add(g.label)
            unique.append(g)
    return unique


def suite_neq_naut(qs) -> list:
    out = []
    for q in qs:
        plane = plane_of_order(q)
        for g in _census_battery(q):
            rep = enumerate_embeddings(g, plane, mode="list")
            ok = (rep.N == rep.n * rep.aut) and (len(rep.images) == rep.n)
            out.append(_result(
                "NEQ-NAUT", f"q={q} {g.label}", ok,
                f"N={rep.N} = {rep.n} * {rep.aut}, images={len(rep.images)}",
                {"q": q, "graph": g.label, "N": rep.N, "n": rep.n,
                 "aut": rep.aut, "images": len(rep.images)}))
    return out


# -- SINGER: cyclic symmetry forces divisibility --------------------------------


def suite_singer(qs) -> list:
    out = []
    for q in qs:
        plane = plane_of_order(q)
        graphs = [make_family("complete", 3), make_family("complete", 4),
                  make_family("cycle", 4), make_family("cycle", 5)]
        if q == 2:
            graphs.append(make_family("cycle", 7))  # 7 | v: hypothesis fails
        for g in graphs:
            rep = enumerate_embeddings(g, plane, mode="list")
            if rep.n == 0:
                out.append(_result("SINGER", f"q={q} {g.label}", True,
                                   "empty census, nothing to check"))
                continue
            sr = singer_orbit_check(g, plane, rep.images)
            if sr.hypothesis_met:
                ok = sr.free and sr.divisible and sr.weak_divisible
                detail = (f"free action, {sr.num_images} images in "
                          f"{sr.num_images // sr.m} orbits of size {sr.m}")
            else:
                ok = sr.weak_divisible
                detail = (f"hypothesis unmet (d={sr.d}); orbit sizes "
                          f"{sr.orbit_sizes}, weak bound "
                          f"{sr.m // sr.d} | {sr.num_images}")
            out.append(_result(
                "SINGER", f"q={q} {g.label}", ok, detail,
                {"q": q, "graph": g.label, "m": sr.m, "n": sr.num_images,
                 "orbit_sizes": list(sr.orbit_sizes),
                 "hypothesis_met": sr.hypothesis_met}))
    return out


# -- BOUNDS: the degree ceiling q+1 and its sharpness ----------------------------


def suite_bounds(qs) -> list:
    out = []
    for q in qs:
        plane = plane_of_order(q)
        rep = enumerate_embeddings(make_family("star", q + 1), plane)
        out.append(_result("BOUNDS", f"q={q} K_{{1,{q + 1}}} embeds",
                           rep.N > 0, f"N={rep.N}",
                           {"q": q, "N": rep.N}))
        rep = enumerate_embeddings(make_family("star", q + 2), plane)
        out.append(_result("BOUNDS", f"q={q} K_{{1,{q + 2}}} impossible",
                           rep.N == 0, f"N={rep.N}",
                           {"q": q, "N": rep.N}))
        emb = double_star_construct(plane)
        degrees = sorted(emb.graph.degree(v)
                         for v in range(emb.graph.num_vertices))
        ok = degrees[-2:] == [q + 1, q + 1] and degrees[-3] < q + 1
        out.append(_result("BOUNDS", f"q={q} double star reaches degree q+1",
                           ok, f"hub degrees {degrees[-2:]}",
                           {"q": q, "degrees": degrees}))
        emb = two_line_construct(plane, q, q)
        out.append(_result("BOUNDS", f"q={q} K_{{{q},{q}}} construction valid",
                           True, f"{len(emb.edge_lines)} edge lines"))
    return out


# -- ARC-EQ: complete graph images are exactly arcs -------------------------------


def suite_arc_eq(qs) -> list:
    out = []
    for q in qs:
        plane = plane_of_order(q)
        for n in range(3, q + 3):
            rep = enumerate_embeddings(make_family("complete", n), plane,
                                       mode="list")
            arcs = find_arcs(plane, n, mode="list")
            image_sets = {img.points for img in rep.images}
            ok = rep.n == arcs.count and image_sets == set(arcs.arcs)
            out.append(_result(
                "ARC-EQ", f"q={q} K_{n} images = {n}-arcs", ok,
                f"{rep.n} images, {arcs.count} arcs",
                {"q": q, "n": n, "images": rep.n, "arcs": arcs.count}))
        if q % 2 == 1:
            rep = enumerate_embeddings(make_family("complete", q + 2), plane)
            out.append(_result(
                "ARC-EQ", f"q={q} no K_{q + 2} at odd order", rep.N == 0,
                f"N={rep.N}", {"q": q, "N": rep.N}))
    return out


# -- BIPART-CLASS: the smaller class is forced onto a line -------------------------


def suite_bipart_class(qs) -> list:
    out = []
    for q in qs:
        plane = plane_of_order(q)
        rep = enumerate_embeddings(
            make_family("complete_bipartite", 2, q + 1), plane)
        out.append(_result(
            "BIPART-CLASS", f"q={q} K_{{2,{q + 1}}} impossible", rep.N == 0,
            f"N={rep.N}", {"q": q, "N": rep.N}))
        rep = enumerate_embeddings(make_family("star", q + 1), plane)
        out.append(_result(
            "BIPART-CLASS", f"q={q} K_{{1,{q + 1}}} embeds", rep.N > 0,
            f"N={rep.N}", {"q": q, "N": rep.N}))
        for m in range(2, q + 1):
            rep = enumerate_embeddings(
                make_family("complete_bipartite", m, q), plane, mode="list")
            tallies = rep.classification["class_status"]
            bad = {k: v for k, v in tallies.items()
                   if not k.startswith("collinear|")}
            out.append(_result(
                "BIPART-CLASS", f"q={q} K_{{{m},{q}}} small class collinear",
                not bad, f"{rep.n} images, tallies {tallies}",
                {"q": q, "m": m, "violating_tallies": bad}))
    return out


# -- TWO-LINES: far enough from the Baer boundary, images sit on two lines ---------


def suite_two_lines(qs) -> list:
    out = []
    for q in qs:
        plane = plane_of_order(q)
        for n in range(1, q):
            if q <= n * n or q - n < 2:
                continue
            g = make_family("complete_bipartite", q - n, q)
            rep = enumerate_embeddings(g, plane, mode="list")
            ok = rep.classification["two_lines"] == rep.n
            pred = predict("F6", q=q, s=q - n, t=q)
            ok = ok and pred.value == rep.n
            out.append(_result(
                "TWO-LINES", f"q={q} K_{{{q - n},{q}}} all on two lines", ok,
                f"{rep.classification['two_lines']}/{rep.n} two-line, "
                f"formula {pred.value}",
                {"q": q, "graph": g.label, "n": rep.n,
                 "two_lines": rep.classification["two_lines"],
                 "formula": pred.value}))
        root = math.isqrt(q)
        if root * root == q and root >= 2 and q - root >= 2:
            # sharpness at the boundary q = n^2: some images escape
            g = make_family("complete_bipartite", q - root, q)
            rep = enumerate_embeddings(g, plane, mode="list")
            escaped = rep.n - rep.classification["two_lines"]
            out.append(_result(
                "TWO-LINES", f"q={q} boundary {g.label} has escapes",
                escaped > 0, f"{escaped} images off two lines",
                {"q": q, "graph": g.label, "escaped": escaped}))
    return out


# -- SUBPLANE-DICHOTOMY: the big class is a line or a subplane ---------------------


def suite_subplane_dichotomy(qs) -> list:
    out = []
    for q in qs:
        n = 2
        size = n * n + n + 1
        if q < size:
            raise ValueError(
                f"dichotomy checks need q >= {size}; got {q}")
        plane = plane_of_order(q)
        res = subplane_class_construct(plane, n)
        if res.found:
            res.embedding.validate()
            detail = f"witness found after {res.witnesses_tried} subplanes"
        else:
            detail = f"{res.reason} after {res.witnesses_tried} subplanes"
        expected = {7: ("no-subplane", 0), 8: ("exhausted", 98112)}
        if q in expected:
            reason, tried = expected[q]
            ok = (not res.found and res.reason == reason
                  and res.witnesses_tried == tried)
        else:
            ok = True  # no frozen expectation; report the outcome
        out.append(_result(
            "SUBPLANE-DICHOTOMY", f"q={q} subplane-class search", ok, detail,
            {"q": q, "found": res.found, "reason": res.reason,
             "witnesses_tried": res.witnesses_tried}))
        if q == 7:
            # the only desk-scale census in range: every K_{5,7} image must
            # have its 7-point class on a line or forming an order-2
            # subplane; this plane has no such subplane, so all collinear
            g = make_family("complete_bipartite", q - n, size)
            rep = enumerate_embeddings(g, plane, mode="list")
            tallies = rep.classification["class_status"]
            bad = {k: v for k, v in tallies.items()
                   if k.split("|")[1] not in ("collinear", "subplane")}
            ok = not bad and rep.n == predict("F5", q=q).value
            out.append(_result(
                "SUBPLANE-DICHOTOMY", f"q={q} K_{{5,7}} big-class dichotomy",
                ok, f"{rep.n} images, tallies {tallies}",
                {"q": q, "n": rep.n, "violating_tallies": bad}))
    return out


# -- BAER-INTERSECT: how images meet Baer subplanes --------------------------------


def suite_baer_intersect(qs) -> list:
    out = []
    for q in qs:
        root = math.isqrt(q)
        if root * root != q or root < 2:
            raise ValueError(f"Baer subplanes need a square order; got {q}")
        plane = plane_of_order(q)
        witnesses = find_subplanes(plane, root, mode="list").witnesses
        out.append(_result(
            "BAER-INTERSECT", f"q={q} witness census",
            len(witnesses) > 0, f"{len(witnesses)} Baer subplanes"))
        rep = enumerate_embeddings(
            make_family("complete_bipartite", q, q), plane, mode="list")
        worst_pts, worst_lines, bad = 0, None, None
        for img in rep.images:
            stats = baer_intersection_stats(img, plane, witnesses)
            worst_pts = max(worst_pts, stats.max_points)
            worst_lines = (stats.min_edge_lines if worst_lines is None
                           else min(worst_lines, stats.min_edge_lines))
            if stats.max_points > q or stats.min_edge_lines < 2:
                bad = {"q": q, "image_points": list(img.points),
                       "max_points": stats.max_points,
                       "min_edge_lines": stats.min_edge_lines}
                break
        ok = bad is None
        out.append(_result(
            "BAER-INTERSECT",
            f"q={q} K_{{{q},{q}}} images meet every witness in <= {q} points "
            "and >= 2 edge lines",
            ok, f"max points {worst_pts}, min edge lines {worst_lines}", bad))
    return out


# -- FORMULAS: every closed form against enumeration -------------------------------


def suite_formulas(qs) -> list:
    out = []
    for q in qs:
        plane = plane_of_order(q)
        for n in range(1, q + 2):
            rep = enumerate_embeddings(make_family("star", n), plane)
            pred = predict("F1", q=q, n=n)
            ok = pred.value * math.factorial(n) == rep.N
            if n >= 2:
                ok = ok and pred.value == rep.n
            out.append(_result(
                "FORMULAS", f"q={q} F1 K_{{1,{n}}}", ok,
                f"formula {pred.value}, census N={rep.N} n={rep.n}",
                {"q": q, "n": n, "formula": pred.value,
                 "census_N": rep.N, "census_n": rep.n}))
        for formula, graph in (("F2", make_family("complete_bipartite", q, q)),
                               ("F4", make_family("complete_bipartite", q - 1, q))):
            rep = enumerate_embeddings(graph, plane)
            pred = predict(formula, q=q)
            out.append(_result(
                "FORMULAS", f"q={q} {formula} {graph.label}",
                pred.value == rep.n,
                f"formula {pred.value}, census {rep.n}",
                {"q": q, "formula": pred.value, "census": rep.n}))
        if q >= 5:
            rep = enumerate_embeddings(
                make_family("complete_bipartite", q - 2, q), plane)
            pred = predict("F5", q=q)
            out.append(_result(
                "FORMULAS", f"q={q} F5 K_{{{q - 2},{q}}}",
                pred.value == rep.n,
                f"formula {pred.value}, census {rep.n}",
                {"q": q, "formula": pred.value, "census": rep.n}))
        m = plane.num_points
        rep = enumerate_embeddings(make_family("complete", 3), plane)
        hypothesis = math.gcd(3, m) == 1  # triangles have v = e = 3
        ok = not hypothesis or rep.n % m == 0
        out.append(_result(
            "FORMULAS", f"q={q} F7 triangle divisibility",
            ok, f"{m} | {rep.n}",
            {"q": q, "m": m, "census": rep.n}))
    return out


# -- registry -----------------------------------------------------------------------


SUITES = {
    "NEQ-NAUT": (suite_neq_naut, (2, 3),
                 "labeled count equals image count times |Aut|"),
    "SINGER": (suite_singer, (2, 3),
               "cyclic point symmetry forces orbit and divisibility structure"),
    "BOUNDS": (suite_bounds, (2, 3, 4),
               "vertex degrees are capped at q+1 and the cap is reached"),
    "ARC-EQ": (suite_arc_eq, (2, 3),
               "complete graph images are exactly the arcs"),
    "BIPART-CLASS": (suite_bipart_class, (2, 3, 4),
                     "class size limits and forced collinearity of the "
                     "smaller class"),
    "TWO-LINES": (suite_two_lines, (3, 4, 5),
                  "away from the square-order boundary, every bipartite "
                  "image lies on two lines"),
    "SUBPLANE-DICHOTOMY": (suite_subplane_dichotomy, (7, 8),
                           "the big class is collinear or a subplane; "
                           "subplane-class searches at orders 7 and 8"),
    "BAER-INTERSECT": (suite_baer_intersect, (4,),
                       "bipartite images meet every Baer subplane in few "
                       "points but share at least two lines"),
    "FORMULAS": (suite_formulas, (2, 3),
                 "every closed-form count against exact enumeration"),
}


def run_suite(suite_id: str, qs=None) -> list:
    """Run one suite over the given plane orders (or its defaults)."""
    if suite_id not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise ValueError(f"unknown suite {suite_id!r}; known suites: {known}")
    func, default_qs, _ = SUITES[suite_id]
    return func(tuple(qs) if qs else default_qs)
