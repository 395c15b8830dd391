"""Embedding engine: enumerate, construct, and classify graph embeddings.

An embedding maps vertices injectively to points so that the induced map
from edges to joining lines is also injective.  The engine counts labeled
embeddings (N) by backtracking and derives the image count n = N/|Aut(G)|;
in list mode it additionally deduplicates canonical images and refuses to
continue if the two answers disagree, so a symmetry bug in either path
cannot go unnoticed.

For complete bipartite graphs whose larger class has exactly q vertices
(and the smaller at least 2) a much faster census runs instead: the small
class is provably collinear in every embedding, with the q-class off that
line, so the search reduces to picking a line, an anchor set on it, and a
per-anchor transversal.  The general engine stays available (force_general)
and the two are compared in the tests.
"""

import dataclasses
import itertools
import math
import multiprocessing

from .graph import Graph, automorphism_count, make_family
from .plane import (
    Plane,
    SubplaneWitness,
    _check_count,
    _first_quadrangle,
    find_subplanes,
    singer_cycle,
    subplane_order_of,
)


# -- embeddings and images ---------------------------------------------------


@dataclasses.dataclass(frozen=True)
class Embedding:
    """A verified vertex->point injection with its induced edge->line map."""

    graph: Graph
    plane: Plane
    vertex_points: tuple
    edge_lines: tuple

    @classmethod
    def build(cls, graph: Graph, plane: Plane, vertex_points) -> "Embedding":
        vp = tuple(vertex_points)
        if len(vp) != graph.num_vertices:
            raise ValueError("vertex map size does not match the graph")
        if len(set(vp)) != len(vp):
            raise ValueError("vertex map is not injective")
        lines = tuple(plane.line_through(vp[u], vp[v]) for u, v in graph.edges)
        emb = cls(graph, plane, vp, lines)
        emb.validate()
        return emb

    def validate(self) -> None:
        """Recheck everything from scratch; raises ValueError on any defect."""
        g, pl, vp = self.graph, self.plane, self.vertex_points
        if len(vp) != g.num_vertices:
            raise ValueError("vertex map size does not match the graph")
        if len(set(vp)) != len(vp):
            raise ValueError("vertex map is not injective")
        for v in range(g.num_vertices):
            if g.degree(v) > pl.q + 1:
                raise ValueError(
                    f"vertex {v} has degree {g.degree(v)} > q+1 = {pl.q + 1}")
        lines = tuple(pl.line_through(vp[u], vp[v]) for u, v in g.edges)
        if lines != self.edge_lines:
            raise ValueError("edge lines are not the induced joining lines")
        if len(set(lines)) != len(lines):
            raise ValueError("induced edge map is not injective")

    def image(self) -> "Image":
        return image_of(self.graph, self.plane, self.vertex_points)


@dataclasses.dataclass(frozen=True)
class Image:
    """Canonical form of an embedding: two labeled embeddings have the same
    Image exactly when they differ by a graph automorphism.  The key is the
    triple (sorted points, sorted lines, formal incidence set); class point
    sets are carried alongside for bipartite graphs, smaller class first."""

    points: tuple
    lines: tuple
    incidence: frozenset
    class_points: tuple | None = None

    @property
    def key(self):
        return (self.points, self.lines, self.incidence)

    def sort_key(self):
        return (self.points, self.lines, tuple(sorted(self.incidence)))


def image_of(graph: Graph, plane: Plane, vertex_points) -> Image:
    vp = tuple(vertex_points)
    lines = []
    incidence = set()
    for u, v in graph.edges:
        li = plane.line_through(vp[u], vp[v])
        lines.append(li)
        incidence.add((vp[u], li))
        incidence.add((vp[v], li))
    class_points = None
    if graph.classes is not None:
        m = graph.classes[0]
        c0 = tuple(sorted(vp[:m]))
        c1 = tuple(sorted(vp[m:]))
        class_points = tuple(sorted((c0, c1), key=lambda t: (len(t), t)))
    return Image(tuple(sorted(vp)), tuple(sorted(lines)), frozenset(incidence),
                 class_points)


@dataclasses.dataclass
class CensusReport:
    """Full result of an enumeration run.  N = n * aut always holds; in list
    mode n also equals the number of deduplicated images."""

    graph_label: str
    plane_label: str
    mode: str
    aut: int
    N: int | None = None
    n: int | None = None
    found: bool | None = None
    images: tuple | None = None
    classification: dict | None = None
    witness: "Embedding | None" = None
    formula_checks: list = dataclasses.field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "graph": self.graph_label,
            "plane": self.plane_label,
            "mode": self.mode,
            "N": self.N,
            "n": self.n,
            "aut": self.aut,
            "found": self.found,
            "classification": self.classification,
            "formula_checks": list(self.formula_checks),
        }


# -- general backtracking engine ---------------------------------------------


def _placement_order(graph: Graph) -> tuple:
    """Static vertex order: highest degree first, then greedily the vertex
    with the most already-ordered neighbors (ties: degree, then index)."""
    n = graph.num_vertices
    if n == 0:
        return ()
    remaining = set(range(n))
    first = max(remaining, key=lambda v: (graph.degree(v), -v))
    order = [first]
    remaining.discard(first)
    placed_mask = 1 << first
    while remaining:
        nxt = max(remaining,
                  key=lambda v: ((graph.adj[v] & placed_mask).bit_count(),
                                 graph.degree(v), -v))
        order.append(nxt)
        remaining.discard(nxt)
        placed_mask |= 1 << nxt
    return tuple(order)


def _search(graph: Graph, plane: Plane, order, roots, mode: str):
    """Backtracking census with the first order slot restricted to `roots`.

    Returns (labeled count, {image key: Image} or None, witness vertex map
    or None).  Candidates for a vertex with placed neighbors are generated
    from the unused lines through its first placed neighbor, which builds in
    the line-injectivity pruning for that edge.
    """
    n = len(order)
    P = plane.num_points
    pos = {v: i for i, v in enumerate(order)}
    placed_nbrs = [
        sorted(pos[u] for u in graph.neighbors(v) if pos[u] < i)
        for i, v in enumerate(order)
    ]
    lt = plane._line_through
    lmask = plane.line_point_mask
    plines = plane.point_lines
    point_at = [0] * n
    state = {"count": 0, "witness": None}
    images: dict | None = {} if mode == "list" else None

    def rec(i: int, used_pts: int, used_lns: int) -> bool:
        if i == n:
            state["count"] += 1
            if mode == "list":
                vp = [0] * n
                for k, v in enumerate(order):
                    vp[v] = point_at[k]
                img = image_of(graph, plane, tuple(vp))
                images[img.key] = img
            elif mode == "exists":
                vp = [0] * n
                for k, v in enumerate(order):
                    vp[v] = point_at[k]
                state["witness"] = tuple(vp)
                return True
            return False
        nbrs = placed_nbrs[i]
        if not nbrs:
            for c in (roots if i == 0 else range(P)):
                if (used_pts >> c) & 1:
                    continue
                point_at[i] = c
                if rec(i + 1, used_pts | (1 << c), used_lns):
                    return True
            return False
        a0 = point_at[nbrs[0]]
        for l0 in plines[a0]:
            if (used_lns >> l0) & 1:
                continue
            free = lmask[l0] & ~used_pts
            while free:
                low = free & -free
                free ^= low
                c = low.bit_length() - 1
                new_lns = 1 << l0
                ok = True
                for j in nbrs[1:]:
                    bit = 1 << lt[c * P + point_at[j]]
                    if (used_lns | new_lns) & bit:
                        ok = False
                        break
                    new_lns |= bit
                if not ok:
                    continue
                point_at[i] = c
                if rec(i + 1, used_pts | low, used_lns | new_lns):
                    return True
        return False

    rec(0, 0, 0)
    return state["count"], images, state["witness"]


def _census_worker(args):
    graph, plane, order, roots, mode = args
    count, images, witness = _search(graph, plane, order, roots, mode)
    return count, images


# -- optimized complete bipartite census ---------------------------------------


def _line_anchored_census(graph: Graph, plane: Plane, mode: str):
    """Census of K_{m,q} (2 <= m <= q = plane order) via the forced structure:
    the m-class lies on a line l, the q-class off l, and an embedding exists
    exactly when every anchor point sees the q-class on q distinct lines.
    Returns (labeled count, images dict or None, witness or None)."""
    m, big = graph.classes
    q = plane.q
    assert big == q and 2 <= m <= q
    P = plane.num_points
    lt = plane._line_through
    configs = 0
    images: dict | None = {} if mode == "list" else None
    m_fact = math.factorial(m) * math.factorial(q)

    for li in range(plane.num_lines):
        row = plane.line_points[li]
        off = [p for p in range(P) if p not in set(row)]
        for anchors in itertools.combinations(row, m):
            # choose q points off the line, each fresh per anchor
            chosen: list[int] = []
            used_by_a = [0] * m  # per-anchor bitmask of spent lines

            def rec(start: int) -> "tuple | None":
                nonlocal configs
                if len(chosen) == q:
                    configs += 1
                    vp = anchors + tuple(chosen)
                    if mode == "list":
                        img = image_of(graph, plane, vp)
                        images[img.key] = img
                        return None
                    if mode == "exists":
                        return vp
                    return None
                if q - len(chosen) > len(off) - start:
                    return None
                for k in range(start, len(off)):
                    c = off[k]
                    bits = []
                    ok = True
                    for ai, a in enumerate(anchors):
                        bit = 1 << lt[c * P + a]
                        if used_by_a[ai] & bit:
                            ok = False
                            break
                        bits.append(bit)
                    if not ok:
                        continue
                    for ai, bit in enumerate(bits):
                        used_by_a[ai] |= bit
                    chosen.append(c)
                    hit = rec(k + 1)
                    chosen.pop()
                    for ai, bit in enumerate(bits):
                        used_by_a[ai] ^= bit
                    if hit is not None:
                        return hit
                return None

            witness = rec(0)
            if witness is not None:
                return 1, None, witness
    count = _check_count(configs * m_fact, "labeled embedding count")
    return (count if mode != "exists" else 0), images, None


# -- public enumeration entry point --------------------------------------------


def enumerate_embeddings(graph: Graph, plane: Plane, mode: str = "count",
                         workers: int = 1, vertex_order: str = "auto",
                         force_general: bool = False) -> CensusReport:
    """Exact embedding census of a graph in a plane.

    mode: "count" for N and n only; "list" additionally collects canonical
    images (and cross-checks n against N/|Aut|); "exists" stops at the first
    embedding and records it as `witness` (always single-worker).
    workers: search-space partitioning over the first vertex's candidate
    points; results are identical for any worker count.  The line-anchored
    fast path for K_{m,q} censuses ignores it (already cheap); pass
    force_general to insist on the general engine.
    vertex_order: "auto" (constraint heuristic) or "index" (natural order);
    results must not depend on the choice.
    """
    if mode not in ("count", "list", "exists"):
        raise ValueError(f"unknown mode {mode!r}")
    if vertex_order not in ("auto", "index"):
        raise ValueError(f"unknown vertex order {vertex_order!r}")
    if graph.num_vertices > plane.num_points:
        raise ValueError(
            f"{graph.num_vertices} vertices cannot inject into "
            f"{plane.num_points} points")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    aut = automorphism_count(graph)
    report = CensusReport(graph_label=graph.label, plane_label=plane.label(),
                          mode=mode, aut=aut)

    if any(graph.degree(v) > plane.q + 1 for v in range(graph.num_vertices)):
        # a vertex needs more distinct lines than pass through any point
        return _finish_report(report, graph, plane, mode, 0, {} if mode == "list" else None, None)

    fast = (not force_general
            and graph.family == "complete_bipartite"
            and graph.classes[1] == plane.q
            and graph.classes[0] >= 2)
    if fast:
        count, images, witness = _line_anchored_census(graph, plane, mode)
        return _finish_report(report, graph, plane, mode, count, images, witness)

    order = (_placement_order(graph) if vertex_order == "auto"
             else tuple(range(graph.num_vertices)))
    roots = range(plane.num_points)
    if mode == "exists" or workers == 1 or graph.num_vertices == 0:
        count, images, witness = _search(graph, plane, order, roots, mode)
    else:
        shards = [[p for p in roots if p % workers == w] for w in range(workers)]
        args = [(graph, plane, order, shard, mode) for shard in shards if shard]
        with multiprocessing.Pool(processes=len(args)) as pool:
            parts = pool.map(_census_worker, args)
        count = sum(c for c, _ in parts)
        images = None
        if mode == "list":
            images = {}
            for _, part_images in parts:
                images.update(part_images)
        witness = None
    count = _check_count(count, "labeled embedding count")
    return _finish_report(report, graph, plane, mode, count, images, witness)


def _finish_report(report: CensusReport, graph: Graph, plane: Plane, mode: str,
                   count: int, images: dict | None, witness) -> CensusReport:
    if mode == "exists":
        report.found = witness is not None
        if witness is not None:
            report.witness = Embedding.build(graph, plane, witness)
            report.images = (report.witness.image(),)
        else:
            report.images = ()
        return report
    aut = report.aut
    if count % aut != 0:
        raise RuntimeError(
            f"internal error: labeled count {count} is not divisible by "
            f"|Aut| = {aut} for {graph.label}")
    report.N = count
    report.n = count // aut
    report.found = count > 0
    if mode == "list":
        imgs = sorted(images.values(), key=Image.sort_key)
        if len(imgs) != report.n:
            raise RuntimeError(
                f"internal error: deduplicated image count {len(imgs)} does "
                f"not match N/|Aut| = {report.n} for {graph.label}")
        report.images = tuple(imgs)
        if graph.classes is not None:
            report.classification = _classification_tallies(report.images, plane)
    return report


def _classification_tallies(images, plane: Plane) -> dict:
    tallies: dict[str, int] = {}
    two_lines = 0
    for img in images:
        cls = classify_bipartite_image(img, plane)
        key = "|".join(s.status for s in cls.class_status)
        tallies[key] = tallies.get(key, 0) + 1
        if cls.two_lines:
            two_lines += 1
    return {"two_lines": two_lines,
            "class_status": dict(sorted(tallies.items()))}


# -- structural classification -------------------------------------------------


@dataclasses.dataclass(frozen=True)
class ClassStatus:
    status: str  # "collinear" | "subplane" | "other"
    order: int | None = None  # subplane order when status == "subplane"


@dataclasses.dataclass(frozen=True)
class BipartiteClassification:
    class_status: tuple  # one ClassStatus per class, smaller class first
    two_lines: bool


def _subplane_order_for_size(size: int) -> int | None:
    # size == n^2 + n + 1  <=>  n == (sqrt(4*size - 3) - 1) / 2
    root = math.isqrt(4 * size - 3)
    if root * root != 4 * size - 3 or (root - 1) % 2:
        return None
    n = (root - 1) // 2
    return n if n >= 2 else None


def two_line_cover(plane: Plane, points) -> bool:
    """True when some two lines jointly contain every one of the points."""
    pts = sorted(set(points))
    if len(pts) <= 4:
        return True  # pair up the points: two joining lines always cover
    if plane.collinear(pts):
        return True
    p0 = pts[0]
    rest = pts[1:]
    if plane.collinear(rest):
        return True  # p0 alone on one line, everything else on the other
    for p1 in rest:
        row = plane.line_point_mask[plane.line_through(p0, p1)]
        out = [p for p in pts if not (row >> p) & 1]
        if len(out) <= 2 or plane.collinear(out):
            return True
    return False


def classify_bipartite_image(image: Image, plane: Plane) -> BipartiteClassification:
    """Per-class structure of a complete bipartite image: each class is
    collinear, exactly a subplane of some order, or neither ("other");
    plus whether the whole image lies on two lines."""
    if image.class_points is None:
        raise ValueError("image does not carry bipartite class data")
    statuses = []
    for cls in image.class_points:
        if plane.collinear(cls):
            statuses.append(ClassStatus("collinear"))
            continue
        order = _subplane_order_for_size(len(cls))
        if order is not None and subplane_order_of(plane, cls) == order:
            statuses.append(ClassStatus("subplane", order))
        else:
            statuses.append(ClassStatus("other"))
    return BipartiteClassification(tuple(statuses),
                                   two_line_cover(plane, image.points))


def complement_lines(emb: Embedding) -> tuple:
    """Joining lines of all non-adjacent embedded vertex pairs.  For complete
    bipartite graphs these provably avoid the edge lines and that is checked
    here; for other graphs the two sets can genuinely overlap (three collinear
    path vertices, say) and no claim is made."""
    g, pl, vp = emb.graph, emb.plane, emb.vertex_points
    comp = set()
    for u, v in itertools.combinations(range(g.num_vertices), 2):
        if not g.adjacent(u, v):
            comp.add(pl.line_through(vp[u], vp[v]))
    if g.family == "complete_bipartite":
        overlap = comp & set(emb.edge_lines)
        if overlap:
            raise RuntimeError(
                f"internal error: complement lines {sorted(overlap)} coincide "
                "with edge lines of a complete bipartite embedding")
    return tuple(sorted(comp))


@dataclasses.dataclass(frozen=True)
class LinearSpaceReport:
    ok: bool
    v: int
    b: int
    violation_pair: tuple | None = None
    thin_line: int | None = None
    degenerate: bool = False       # b <= 1: accepted but outside the bound's scope
    bound_holds: bool | None = None  # b >= v, evaluated when ok and b > 1
    equality_case: str | None = None  # when b == v: "near-pencil" | "projective-plane"


def linear_space_check(points, lines, plane: Plane) -> LinearSpaceReport:
    """Check that (points, lines) is a linear space inside the plane: every
    point pair joined by a line of the set, every line carrying >= 2 of the
    points.  Reports the counting bound b >= v and, at equality, which of
    the two extremal shapes holds."""
    pts = sorted(set(points))
    lns = sorted(set(lines))
    lnset = set(lns)
    violation = None
    for a, b in itertools.combinations(pts, 2):
        if plane.line_through(a, b) not in lnset:
            violation = (a, b)
            break
    thin = None
    pmask = 0
    for p in pts:
        pmask |= 1 << p
    on_counts = [(plane.line_point_mask[l] & pmask).bit_count() for l in lns]
    for l, c in zip(lns, on_counts):
        if c < 2:
            thin = l
            break
    ok = violation is None and thin is None
    v, b = len(pts), len(lns)
    degenerate = b <= 1
    bound_holds = None
    equality_case = None
    if ok and not degenerate:
        bound_holds = b >= v
        if b == v:
            equality_case = ("near-pencil" if max(on_counts) == v - 1
                             else "projective-plane")
    return LinearSpaceReport(ok=ok, v=v, b=b, violation_pair=violation,
                             thin_line=thin, degenerate=degenerate,
                             bound_holds=bound_holds, equality_case=equality_case)


# -- constructions -------------------------------------------------------------


def two_line_construct(plane: Plane, m: int, n: int) -> Embedding:
    """K_{m,n} on two lines through a common point O: the smaller class on
    the first line through O, the larger on the second, lexicographically
    least choices throughout.  Needs m, n <= q."""
    q = plane.q
    if min(m, n) < 1:
        raise ValueError("class sizes must be >= 1")
    if max(m, n) > q:
        raise ValueError(f"class of size {max(m, n)} exceeds the plane order {q}")
    o = 0
    l1, l2 = plane.point_lines[o][:2]
    small, big = sorted((m, n))
    a_pts = [p for p in plane.line_points[l1] if p != o][:small]
    b_pts = [p for p in plane.line_points[l2] if p != o][:big]
    graph = make_family("complete_bipartite", m, n)
    return Embedding.build(graph, plane, tuple(a_pts) + tuple(b_pts))


def star_construct(plane: Plane, n: int) -> Embedding:
    """K_{1,n} for n <= q+1: hub plus n points on a line missing it when
    n <= q; for n = q+1 one leaf on each line through the hub."""
    q = plane.q
    if n < 1 or n > q + 1:
        raise ValueError(f"star needs 1 <= n <= q+1 = {q + 1}")
    hub = 0
    graph = make_family("star", n)
    if n <= q:
        off = next(l for l in range(plane.num_lines)
                   if hub not in plane.line_points[l])
        leaves = plane.line_points[off][:n]
    else:
        leaves = tuple(next(p for p in plane.line_points[l] if p != hub)
                       for l in plane.point_lines[hub])
    return Embedding.build(graph, plane, (hub,) + tuple(leaves))


def double_star_construct(plane: Plane) -> Embedding:
    """The sharpness construction for the degree bound: two adjacent hubs,
    each joined to the q points of a line avoiding both hubs -- excluding
    the point where that line meets the hub line, which would force two
    edges onto one line.  Exactly the two hubs reach degree q+1."""
    q = plane.q
    p0, q0 = 0, 1
    hub_line = plane.line_through(p0, q0)
    l = next(li for li in range(plane.num_lines)
             if p0 not in plane.line_points[li] and q0 not in plane.line_points[li])
    cut = plane.meet(hub_line, l)
    leaves = [p for p in plane.line_points[l] if p != cut]
    assert len(leaves) == q
    edges = [(0, 1)]
    for i in range(q):
        edges += [(0, 2 + i), (1, 2 + i)]
    graph = Graph(q + 2, edges)
    return Embedding.build(graph, plane, (p0, q0) + tuple(leaves))


def greedy_complete_construct(plane: Plane, n: int) -> Embedding:
    """K_n by incremental arc growth: start from the least quadrangle and
    repeatedly take the least point on no line spanned by two chosen points.
    Any plane hosts n <= 4 (quadrangle axiom); beyond that the covering
    argument needs q >= n(n-1)/2."""
    q = plane.q
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > 4 and q < n * (n - 1) // 2:
        raise ValueError(
            f"K_{n} needs plane order >= n(n-1)/2 = {n * (n - 1) // 2}, got {q}")
    quad = _first_quadrangle(plane)
    assert quad is not None
    pts = list(quad[:n]) if n <= 4 else list(quad)
    while len(pts) < n:
        covered = 0
        for a, b in itertools.combinations(pts, 2):
            covered |= plane.line_point_mask[plane.line_through(a, b)]
        nxt = next((p for p in range(plane.num_points) if not (covered >> p) & 1),
                   None)
        if nxt is None:
            raise RuntimeError(
                "internal error: covering bound violated during greedy growth")
        pts.append(nxt)
    return Embedding.build(make_family("complete", n), plane, tuple(pts))


def baer_class_construct(plane: Plane, witness: SubplaneWitness) -> Embedding:
    """K_{q-n,q} from a Baer subplane of order n (q = n^2): the small class
    is a subplane line minus its subplane points, the large class is the
    subplane minus that line.  The large class is never collinear."""
    n = witness.order
    if not witness.is_baer:
        raise ValueError("witness is not a Baer subplane of this plane")
    q = plane.q
    assert q == n * n
    line = min(witness.lines)
    row = plane.line_points[line]
    wpts = set(witness.points)
    u_cls = [p for p in row if p not in wpts]
    v_cls = [p for p in witness.points if p not in set(row)]
    assert len(u_cls) == q - n and len(v_cls) == q
    graph = make_family("complete_bipartite", q - n, q)
    emb = Embedding.build(graph, plane, tuple(u_cls) + tuple(v_cls))
    assert not plane.collinear(v_cls)
    return emb


@dataclasses.dataclass(frozen=True)
class SubplaneClassResult:
    found: bool
    embedding: Embedding | None
    reason: str | None  # None when found; "no-subplane" | "exhausted"
    witnesses_tried: int


def subplane_class_construct(plane: Plane, n: int) -> SubplaneClassResult:
    """Search for an embedding of K_{q-n, n^2+n+1} whose big class is exactly
    a subplane of order n.  For each subplane witness the small class must
    come from the points on no extended subplane line, pairwise joined by
    witness-free lines; an exhaustive miss is reported distinctly from the
    plane having no order-n subplane at all."""
    q = plane.q
    size = n * n + n + 1
    if n < 2:
        raise ValueError("subplane order must be >= 2")
    if q < size:
        raise ValueError(
            f"big class of size n^2+n+1 = {size} needs plane order >= {size}, got {q}")
    witnesses = find_subplanes(plane, n, mode="list").witnesses
    if not witnesses:
        return SubplaneClassResult(False, None, "no-subplane", 0)
    k = q - n
    lt = plane._line_through
    P = plane.num_points
    for tried, witness in enumerate(witnesses, start=1):
        covered = 0
        for l in witness.lines:
            covered |= plane.line_point_mask[l]
        wmask = 0
        for p in witness.points:
            wmask |= 1 << p
        externals = [p for p in range(P) if not (covered >> p) & 1]
        if len(externals) < k:
            continue
        compat = {
            (a, b)
            for a, b in itertools.combinations(externals, 2)
            if not plane.line_point_mask[lt[a * P + b]] & wmask
        }

        def grow(clique: list, start: int) -> list | None:
            if len(clique) == k:
                return clique
            for idx in range(start, len(externals)):
                c = externals[idx]
                if len(clique) + len(externals) - idx < k:
                    return None
                if all((min(c, x), max(c, x)) in compat for x in clique):
                    hit = grow(clique + [c], idx + 1)
                    if hit is not None:
                        return hit
            return None

        clique = grow([], 0)
        if clique is not None:
            graph = make_family("complete_bipartite", k, size)
            if k <= size:
                vp = tuple(clique) + witness.points
            else:
                vp = witness.points + tuple(clique)
            emb = Embedding.build(graph, plane, vp)
            return SubplaneClassResult(True, emb, None, tried)
    return SubplaneClassResult(False, None, "exhausted", len(witnesses))


# -- Baer intersection statistics ----------------------------------------------


@dataclasses.dataclass(frozen=True)
class BaerIntersectionStats:
    num_witnesses: int
    max_points: int
    min_points: int
    max_edge_lines: int
    min_edge_lines: int


def baer_intersection_stats(image: Image, plane: Plane, witnesses) -> BaerIntersectionStats:
    """How an image meets every Baer subplane witness: image points inside
    the witness point set, and embedded edge lines among the witness lines;
    aggregated extremes over all witnesses."""
    if not witnesses:
        raise ValueError("no witnesses supplied")
    ipts = set(image.points)
    ilns = set(image.lines)
    pcounts = []
    lcounts = []
    for w in witnesses:
        pcounts.append(len(ipts.intersection(w.points)))
        lcounts.append(len(ilns.intersection(w.lines)))
    return BaerIntersectionStats(
        num_witnesses=len(witnesses),
        max_points=max(pcounts), min_points=min(pcounts),
        max_edge_lines=max(lcounts), min_edge_lines=min(lcounts))


# -- Singer orbit analysis -------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class SingerOrbitReport:
    m: int                      # q^2 + q + 1
    num_images: int
    hypothesis_met: bool        # gcd(v, m) == 1 or gcd(e, m) == 1
    d: int                      # gcd(v, e, m): stabilizer orders divide this
    free: bool                  # all orbits have full size m
    orbit_sizes: tuple
    divisible: bool             # m | n
    weak_divisible: bool        # (m / d) | n


def singer_orbit_check(graph: Graph, plane: Plane, images) -> SingerOrbitReport:
    """Partition a complete image census into orbits of the Singer cycle and
    check the divisibility consequences.  With gcd(v, m) = 1 or gcd(e, m) = 1
    the action is free, every orbit has size m = q^2+q+1, and m | n; in
    general stabilizer orders divide d = gcd(v, e, m) so (m/d) | n."""
    cyc = singer_cycle(plane)
    pm, lm = cyc.point_map, cyc.line_map
    keys = {img.key for img in images}

    def step(key):
        pts, lns, inc = key
        return (tuple(sorted(pm[p] for p in pts)),
                tuple(sorted(lm[l] for l in lns)),
                frozenset((pm[p], lm[l]) for p, l in inc))

    seen = set()
    orbit_sizes = []
    for key in sorted(keys):
        if key in seen:
            continue
        size = 0
        cur = key
        while True:
            seen.add(cur)
            size += 1
            cur = step(cur)
            if cur not in keys:
                raise ValueError(
                    "image list is not closed under the Singer map; "
                    "the census is incomplete")
            if cur == key:
                break
        orbit_sizes.append(size)
    m = plane.num_points
    v, e = graph.num_vertices, graph.num_edges
    d = math.gcd(math.gcd(v, e), m)
    n = len(keys)
    return SingerOrbitReport(
        m=m, num_images=n,
        hypothesis_met=math.gcd(v, m) == 1 or math.gcd(e, m) == 1,
        d=d,
        free=all(s == m for s in orbit_sizes),
        orbit_sizes=tuple(sorted(set(orbit_sizes))),
        divisible=n % m == 0,
        weak_divisible=n % (m // d) == 0)
