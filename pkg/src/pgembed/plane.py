"""Finite projective planes: construction, validation, queries, searches.

A plane of order q has q^2+q+1 points and as many lines, q+1 points per
line.  Points and lines are plain integer indices; incidence is stored both
as per-line point tuples and per-point line tuples, plus bitmask forms and
flat lookup tables (line through a point pair, meet of a line pair) so the
search code can stay allocation-free in its inner loops.

Classical planes come from :func:`pg2`: points are homogeneous coordinate
triples over a Galois field, normalized so the first nonzero coordinate is 1
and sorted lexicographically; lines are the dual triples and incidence is a
vanishing dot product.  Arbitrary planes (including broken structures that
:func:`verify_axioms` should reject) can be built from raw line sets or
loaded from the text format documented in the README.
"""

from __future__ import annotations

import dataclasses

from .galois import Field

PG2_MAX_ORDER = 32

# Counts are exact bigints internally, but anything past this bound is
# reported as an error instead of silently growing: downstream consumers
# (CSV, JSON, other tooling) assume counts fit a signed 64-bit slot.
COUNT_LIMIT = 2**63 - 1


class CountOverflowError(RuntimeError):
    """A census or search count left the signed 64-bit range."""


class PlaneFormatError(ValueError):
    """Malformed plane file.  Carries the 1-based offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


def _check_count(value: int, what: str) -> int:
    if value > COUNT_LIMIT:
        raise CountOverflowError(f"{what} exceeds 2^63-1")
    return value


class Plane:
    """Incidence structure with projective-plane query helpers.

    Build with :func:`pg2`, :func:`load_plane`, or :meth:`from_line_sets`.
    Instances are immutable after construction and picklable, so they can be
    shared freely with worker processes.
    """

    def __init__(self, q: int, line_points, provenance: str = "memory",
                 field: Field | None = None, point_coords=None,
                 num_points: int | None = None):
        self.q = q
        self.line_points = tuple(tuple(row) for row in line_points)
        self.num_lines = len(self.line_points)
        used = 1 + max((max(row) for row in self.line_points if row), default=-1)
        if num_points is not None and num_points < used:
            raise ValueError("declared point count smaller than indices used")
        self.num_points = num_points if num_points is not None else used
        self.provenance = provenance
        self.field = field
        self.point_coords = point_coords  # homogeneous triples, classical planes only
        self._index()

    @classmethod
    def from_line_sets(cls, q: int, line_points, provenance: str = "memory") -> "Plane":
        return cls(q, line_points, provenance=provenance)

    def _index(self) -> None:
        npts, nlns = self.num_points, self.num_lines
        per_point: list[list[int]] = [[] for _ in range(npts)]
        self.line_point_mask = []
        for li, row in enumerate(self.line_points):
            mask = 0
            for p in row:
                mask |= 1 << p
                per_point[p].append(li)
            self.line_point_mask.append(mask)
        self.point_lines = tuple(tuple(ls) for ls in per_point)
        self.point_line_mask = [sum(1 << li for li in ls) for ls in self.point_lines]

        # flat pair tables; -1 marks "no unique answer" and only ever
        # survives on structures that fail the axioms
        lt = [-1] * (npts * npts)
        for li, row in enumerate(self.line_points):
            for i, a in enumerate(row):
                base = a * npts
                for b in row[i + 1:]:
                    lt[base + b] = li
                    lt[b * npts + a] = li
        self._line_through = lt
        mt = [-1] * (nlns * nlns)
        for p, ls in enumerate(self.point_lines):
            for i, a in enumerate(ls):
                base = a * nlns
                for b in ls[i + 1:]:
                    mt[base + b] = p
                    mt[b * nlns + a] = p
        self._meet = mt

    # -- queries -----------------------------------------------------------

    def line_through(self, p1: int, p2: int) -> int:
        """Index of the unique line joining two distinct points."""
        if p1 == p2:
            raise ValueError("line_through needs two distinct points")
        li = self._line_through[p1 * self.num_points + p2]
        if li < 0:
            raise ValueError(f"points {p1},{p2} lie on no common line (broken structure)")
        return li

    def meet(self, l1: int, l2: int) -> int:
        """Index of the unique point on both of two distinct lines."""
        if l1 == l2:
            raise ValueError("meet needs two distinct lines")
        p = self._meet[l1 * self.num_lines + l2]
        if p < 0:
            raise ValueError(f"lines {l1},{l2} share no point (broken structure)")
        return p

    def collinear(self, points) -> bool:
        """True when all the points sit on one line; sets of size <= 2 pass."""
        pts = list(points)
        if len(pts) <= 2:
            return True
        mask = self.line_point_mask[self.line_through(pts[0], pts[1])]
        return all((mask >> p) & 1 for p in pts[2:])

    def points_on_line(self, li: int) -> tuple[int, ...]:
        return self.line_points[li]

    def lines_through(self, p: int) -> tuple[int, ...]:
        return self.point_lines[p]

    def label(self) -> str:
        if self.provenance == "classical":
            return f"PG(2,{self.q})"
        return f"order-{self.q} plane [{self.provenance}]"

    def __repr__(self) -> str:
        return f"Plane(q={self.q}, points={self.num_points}, lines={self.num_lines}, {self.provenance})"


# ---------------------------------------------------------------------------
# classical construction


def pg2(field: Field) -> Plane:
    """The Desarguesian plane PG(2, q) over the given field.

    Points are homogeneous triples with the first nonzero coordinate
    normalized to 1, sorted lexicographically by element code; lines are the
    dual triples under the same normalization, and incidence is a zero dot
    product.  Supported for q <= 32 (larger planes get slow and serve no
    desk-scale purpose here).
    """
    q = field.order
    if q > PG2_MAX_ORDER:
        raise ValueError(f"pg2 supports orders up to {PG2_MAX_ORDER}, got {q}")

    points = [(0, 0, 1)]
    points += [(0, 1, c) for c in range(q)]
    points += [(1, a, b) for a in range(q) for b in range(q)]
    points.sort()
    assert len(points) == q * q + q + 1

    mul, add = field.mul, field.add

    def dot(u, v) -> int:
        return add(add(mul(u[0], v[0]), mul(u[1], v[1])), mul(u[2], v[2]))

    line_rows = []
    for coeffs in points:  # dual triples run over the same normalized set
        row = [i for i, pt in enumerate(points) if dot(coeffs, pt) == 0]
        assert len(row) == q + 1
        line_rows.append(tuple(row))

    return Plane(q, line_rows, provenance="classical", field=field,
                 point_coords=tuple(points))


# ---------------------------------------------------------------------------
# axiom verification


@dataclasses.dataclass(frozen=True)
class AxiomCheck:
    ok: bool
    counterexample: dict | None = None


@dataclasses.dataclass(frozen=True)
class AxiomReport:
    """Outcome of verify_axioms: per-axiom results plus the inferred order."""

    passed: bool
    axioms: dict
    order: int | None
    uniform_line_size: bool
    num_points: int
    num_lines: int

    def summary_lines(self) -> list[str]:
        names = {
            "a": "every point pair lies on exactly one line",
            "b": "every line carries at least three points",
            "c": "every line pair meets in exactly one point",
            "d": "a quadrangle (4 points, no 3 collinear) exists",
        }
        out = []
        for key in "abcd":
            chk = self.axioms[key]
            status = "ok" if chk.ok else f"FAIL {chk.counterexample}"
            out.append(f"axiom ({key}) {names[key]}: {status}")
        if self.order is not None:
            out.append(f"inferred order q={self.order} "
                       f"({self.num_points} points, {self.num_lines} lines)")
        else:
            out.append("order not inferable: line sizes are not uniform")
        return out


def verify_axioms(plane: Plane) -> AxiomReport:
    """Check the four projective-plane axioms directly on the incidence data.

    Deliberately avoids the precomputed pair tables: everything is recounted
    from the raw masks so a corrupt structure cannot vouch for itself.
    """
    npts, nlns = plane.num_points, plane.num_lines
    pmask = plane.point_line_mask
    lmask = plane.line_point_mask

    ax_a = AxiomCheck(True)
    for p1 in range(npts):
        for p2 in range(p1 + 1, npts):
            c = (pmask[p1] & pmask[p2]).bit_count()
            if c != 1:
                ax_a = AxiomCheck(False, {"points": (p1, p2), "common_lines": c})
                break
        if not ax_a.ok:
            break

    ax_b = AxiomCheck(True)
    for li in range(nlns):
        c = lmask[li].bit_count()
        if c < 3:
            ax_b = AxiomCheck(False, {"line": li, "points": c})
            break

    ax_c = AxiomCheck(True)
    for l1 in range(nlns):
        for l2 in range(l1 + 1, nlns):
            c = (lmask[l1] & lmask[l2]).bit_count()
            if c != 1:
                ax_c = AxiomCheck(False, {"lines": (l1, l2), "common_points": c})
                break
        if not ax_c.ok:
            break

    quad = _first_quadrangle(plane)
    ax_d = AxiomCheck(quad is not None,
                      None if quad else {"reason": "no quadrangle found"})

    sizes = {lmask[li].bit_count() for li in range(nlns)}
    uniform = len(sizes) == 1
    order = None
    if uniform and nlns:
        size = sizes.pop()
        order = size - 1

    passed = ax_a.ok and ax_b.ok and ax_c.ok and ax_d.ok
    return AxiomReport(passed=passed,
                       axioms={"a": ax_a, "b": ax_b, "c": ax_c, "d": ax_d},
                       order=order, uniform_line_size=uniform,
                       num_points=npts, num_lines=nlns)


def _first_quadrangle(plane: Plane):
    """Lexicographically least 4 points with no 3 collinear, or None."""
    for quad in _iter_quadrangles(plane):
        return quad
    return None


def _iter_quadrangles(plane: Plane):
    """All 4-point sets with no 3 collinear, ascending lexicographic order."""
    npts = plane.num_points
    lt = plane._line_through
    lmask = plane.line_point_mask
    full = (1 << npts) - 1
    for a in range(npts - 3):
        for b in range(a + 1, npts - 2):
            li_ab = lt[a * npts + b]
            if li_ab < 0:
                continue
            mask_ab = lmask[li_ab]
            for c in range(b + 1, npts - 1):
                if (mask_ab >> c) & 1:
                    continue
                li_ac = lt[a * npts + c]
                li_bc = lt[b * npts + c]
                if li_ac < 0 or li_bc < 0:
                    continue
                bad = mask_ab | lmask[li_ac] | lmask[li_bc]
                good = ~bad & full & -(1 << (c + 1))  # indices above c only
                while good:
                    low = good & -good
                    yield (a, b, c, low.bit_length() - 1)
                    good ^= low


# ---------------------------------------------------------------------------
# arcs


@dataclasses.dataclass(frozen=True)
class ArcSearchResult:
    """Outcome of find_arcs.  Which fields are filled depends on the mode:
    count -> count; list -> count and arcs; exists -> found (count is the
    number of witnesses kept, 0 or 1)."""

    n: int
    mode: str
    found: bool
    count: int | None
    arcs: tuple[tuple[int, ...], ...] = ()


def find_arcs(plane: Plane, n: int, mode: str = "count") -> ArcSearchResult:
    """Census of n-arcs (point sets of size n, no 3 collinear).

    Backtracking over ascending point indices; the candidate mask drops
    everything collinear with a chosen pair, so each arc is produced exactly
    once.  mode: "count", "list", or "exists" (stop at the first witness).
    """
    if mode not in ("count", "list", "exists"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 1:
        raise ValueError("arc size must be >= 1")
    npts = plane.num_points
    lt = plane._line_through
    lmask = plane.line_point_mask
    full = (1 << npts) - 1

    count = 0
    arcs: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def extend(cand: int) -> bool:
        nonlocal count
        if len(chosen) == n:
            count += 1
            if mode != "count":
                arcs.append(tuple(chosen))
                if mode == "exists":
                    return True
            return False
        m = cand
        while m:
            low = m & -m
            p = low.bit_length() - 1
            m ^= low  # bits above p remain: ascending order, each set once
            nc = m
            base = p * npts
            for c in chosen:  # drop everything collinear with (p, c)
                nc &= ~lmask[lt[base + c]]
            chosen.append(p)
            if len(chosen) + nc.bit_count() >= n:
                if extend(nc):
                    return True
            chosen.pop()
        return False

    extend(full)
    _check_count(count, "arc count")
    if mode == "exists":
        return ArcSearchResult(n, mode, count > 0, None, tuple(arcs[:1]))
    return ArcSearchResult(n, mode, count > 0, count,
                           tuple(arcs) if mode == "list" else ())


# ---------------------------------------------------------------------------
# subplanes


@dataclasses.dataclass(frozen=True)
class SubplaneWitness:
    """A subplane of the host plane: its point set, induced line set, order,
    and whether it is Baer (order^2 == host order, so every host line meets
    the point set)."""

    order: int
    points: tuple[int, ...]
    lines: tuple[int, ...]
    is_baer: bool

    def verify(self, plane: Plane) -> None:
        """Independent validity check; raises ValueError on any defect."""
        n = self.order
        size = n * n + n + 1
        if len(self.points) != size or len(self.lines) != size:
            raise ValueError("witness has wrong point/line counts")
        pmask = 0
        for p in self.points:
            pmask |= 1 << p
        for li in self.lines:
            if (plane.line_point_mask[li] & pmask).bit_count() != n + 1:
                raise ValueError(f"line {li} does not meet the witness in {n + 1} points")
        # every point pair must be joined inside the witness line set
        lset = set(self.lines)
        for i, a in enumerate(self.points):
            for b in self.points[i + 1:]:
                if plane.line_through(a, b) not in lset:
                    raise ValueError(f"pair ({a},{b}) joined outside the witness")
        if self.is_baer:
            if n * n != plane.q:
                raise ValueError("Baer flag on a non-Baer order")
            for li in range(plane.num_lines):
                if not plane.line_point_mask[li] & pmask:
                    raise ValueError(f"plane line {li} misses the Baer witness")


@dataclasses.dataclass(frozen=True)
class SubplaneSearchResult:
    order: int
    mode: str
    found: bool
    count: int | None
    witnesses: tuple[SubplaneWitness, ...] = ()
    note: str = ""


def subplane_order_of(plane: Plane, points) -> int | None:
    """Order n if the point set is exactly a subplane (every joining line
    meets it in n+1 points), else None.  Size must be n^2+n+1."""
    pts = sorted(set(points))
    size = len(pts)
    n = 1
    while n * n + n + 1 < size:
        n += 1
    if n * n + n + 1 != size or n < 2:
        return None
    pmask = 0
    for p in pts:
        pmask |= 1 << p
    npts = plane.num_points
    lt = plane._line_through
    for i, a in enumerate(pts):
        base = a * npts
        for b in pts[i + 1:]:
            li = lt[base + b]
            if li < 0 or (plane.line_point_mask[li] & pmask).bit_count() != n + 1:
                return None
    return n


def _quadrangle_closure(plane: Plane, start, limit: int):
    """Close a point set under pairwise joins and line meets.

    Returns (points, lines) once stable, or None as soon as the point count
    passes `limit`.  The loop converges fast: either the set is (part of) a
    small subplane, or it blows through the limit within a round or two.
    """
    npts = plane.num_points
    lt = plane._line_through
    mt = plane._meet
    nlns = plane.num_lines
    pts = sorted(set(start))
    while True:
        lines = set()
        for i, a in enumerate(pts):
            base = a * npts
            for b in pts[i + 1:]:
                lines.add(lt[base + b])
        lset = sorted(lines)
        new_pts = set(pts)
        for i, l1 in enumerate(lset):
            base = l1 * nlns
            for l2 in lset[i + 1:]:
                new_pts.add(mt[base + l2])
                if len(new_pts) > limit:
                    return None
        if len(new_pts) == len(pts):
            return tuple(pts), tuple(lset)
        pts = sorted(new_pts)


def find_subplanes(plane: Plane, n: int, mode: str = "count",
                   proper: bool = False) -> SubplaneSearchResult:
    """Census of subplanes of order n via quadrangle closures.

    Every order-2 or order-3 subplane is generated by any of its quadrangles
    (the quadrangle plus its diagonal pattern rebuilds the whole thing), so
    closing each quadrangle of the host plane and keeping the closures of the
    right size is a complete search at those orders.  Suborders violating
    the Bruck condition (n^2 = q or q >= n^2 + n) are rejected up front;
    n = q is allowed and finds the plane itself when some quadrangle
    generates it (set proper=True to drop that witness).
    """
    if mode not in ("count", "list", "exists"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 2:
        raise ValueError("subplane order must be >= 2")
    q = plane.q
    if n > q:
        return SubplaneSearchResult(n, mode, False, 0, note="order exceeds host order")
    if n < q and not (n * n == q or q >= n * n + n):
        return SubplaneSearchResult(n, mode, False, 0,
                                    note="inadmissible by the Bruck bound")

    target = n * n + n + 1
    is_baer = n * n == q
    seen: set[tuple[int, ...]] = set()
    witnesses: list[SubplaneWitness] = []

    for quad in _iter_quadrangles(plane):
        closed = _quadrangle_closure(plane, quad, target)
        if closed is None:
            continue
        pts, lines = closed
        if len(pts) != target or len(lines) != target:
            continue
        if proper and len(pts) == plane.num_points:
            continue
        if pts in seen:
            continue
        # confirm: every joining line meets the set in exactly n+1 points
        if subplane_order_of(plane, pts) != n:
            continue
        seen.add(pts)
        if is_baer:
            pmask = 0
            for p in pts:
                pmask |= 1 << p
            for li in range(plane.num_lines):
                if not plane.line_point_mask[li] & pmask:
                    raise AssertionError(
                        "Baer witness missed by a plane line (corrupt structure)")
        if mode != "count":
            witnesses.append(SubplaneWitness(order=n, points=pts, lines=lines,
                                             is_baer=is_baer))
        if mode == "exists":
            return SubplaneSearchResult(n, mode, True, None, tuple(witnesses))

    count = _check_count(len(seen), "subplane count")
    if mode == "exists":
        return SubplaneSearchResult(n, mode, False, None, ())
    return SubplaneSearchResult(n, mode, count > 0, count,
                                tuple(witnesses) if mode == "list" else ())


# ---------------------------------------------------------------------------
# Singer cycle


@dataclasses.dataclass(frozen=True)
class SingerCycle:
    """A collineation of order q^2+q+1 acting in one cycle on points and on
    lines.  point_map/line_map send each index to its image."""

    point_map: tuple[int, ...]
    line_map: tuple[int, ...]


def singer_cycle(plane: Plane) -> SingerCycle:
    """Build a Singer cycle for a classical plane.

    Realizes GF(q^3) as a cubic extension of the plane's base field; the
    normalized coordinate triples of the points are exactly the projective
    classes of the extension's nonzero elements, and multiplication by a
    generator of the extension's multiplicative group is a linear map that
    shifts those classes in a single cycle.  Planes without classical
    provenance are refused: there is nothing to extend.
    """
    if plane.provenance != "classical" or plane.field is None or plane.point_coords is None:
        raise ValueError("singer_cycle requires a plane built by pg2 "
                         "(loaded planes carry no field structure)")
    F = plane.field
    q = F.order
    period = q * q + q + 1

    # smallest monic cubic x^3 + a2 x^2 + a1 x + a0 that is irreducible
    # (no root) and whose residue class of x generates the full
    # multiplicative group of order q^3 - 1
    reduction = None
    for a2 in range(q):
        for a1 in range(q):
            for a0 in range(q):
                if any(_cubic_eval(F, a0, a1, a2, t) == 0 for t in range(q)):
                    continue
                if _x_order(F, a0, a1, a2) == q**3 - 1:
                    reduction = (a0, a1, a2)
                    break
            if reduction:
                break
        if reduction:
            break
    assert reduction is not None, "no primitive cubic found (unreachable)"
    a0, a1, a2 = reduction

    index_of = {t: i for i, t in enumerate(plane.point_coords)}

    def mul_by_x(t):
        c0, c1, c2 = t
        return (F.mul(F.neg(a0), c2),
                F.sub(c0, F.mul(a1, c2)),
                F.sub(c1, F.mul(a2, c2)))

    def normalize(t):
        for c in t:
            if c:
                inv = F.inv(c)
                return tuple(F.mul(inv, x) for x in t)
        raise AssertionError("zero triple (unreachable)")

    point_map = tuple(index_of[normalize(mul_by_x(t))] for t in plane.point_coords)

    # the orbit of any point must be a single full cycle
    walk, p = 0, 0
    for _ in range(period):
        p = point_map[p]
        walk += 1
        if p == 0:
            break
    if walk != period:
        raise AssertionError(f"Singer point orbit has length {walk}, expected {period}")

    # induced line map; also validates that lines go to lines
    line_map = []
    for li, row in enumerate(plane.line_points):
        imgs = sorted(point_map[p] for p in row)
        tgt = plane.line_through(imgs[0], imgs[1])
        if plane.line_points[tgt] != tuple(imgs):
            raise AssertionError(f"image of line {li} is not a line")
        line_map.append(tgt)
    return SingerCycle(point_map=point_map, line_map=tuple(line_map))


def _cubic_eval(F: Field, a0: int, a1: int, a2: int, t: int) -> int:
    # t^3 + a2 t^2 + a1 t + a0
    t2 = F.mul(t, t)
    val = F.mul(t2, t)
    val = F.add(val, F.mul(a2, t2))
    val = F.add(val, F.mul(a1, t))
    return F.add(val, a0)


def _x_order(F: Field, a0: int, a1: int, a2: int) -> int:
    """Multiplicative order of the class of x modulo the cubic."""
    q = F.order
    full = q**3 - 1
    t = (1, 0, 0)
    for e in range(1, full + 1):
        c0, c1, c2 = t
        t = (F.mul(F.neg(a0), c2),
             F.sub(c0, F.mul(a1, c2)),
             F.sub(c1, F.mul(a2, c2)))
        if t == (1, 0, 0):
            return e
    return 0


# ---------------------------------------------------------------------------
# serialization


def plane_to_text(plane: Plane) -> str:
    """Canonical text form: header, then one line per row of ascending point
    indices, rows sorted lexicographically, trailing newline."""
    rows = sorted(plane.line_points)
    out = [f"plane q={plane.q} points={plane.num_points} lines={plane.num_lines}"]
    out.extend(" ".join(str(p) for p in row) for row in rows)
    return "\n".join(out) + "\n"


def save_plane(plane: Plane, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(plane_to_text(plane))


def parse_plane_text(text: str, provenance: str = "file") -> Plane:
    """Parse the plane file format; `#` starts a comment anywhere on a line.

    Structural defects (bad header, wrong row length, out-of-range or
    non-increasing indices) raise PlaneFormatError with the 1-based line
    number.  Axiom violations are not checked here; run verify_axioms.
    """
    header = None
    rows: list[tuple[int, ...]] = []
    header_lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            parts = line.split()
            if len(parts) != 4 or parts[0] != "plane":
                raise PlaneFormatError("expected header 'plane q=<n> points=<n> lines=<n>'", lineno)
            vals = {}
            for part in parts[1:]:
                key, _, num = part.partition("=")
                if key not in ("q", "points", "lines") or not num.isdigit():
                    raise PlaneFormatError(f"bad header field {part!r}", lineno)
                vals[key] = int(num)
            if len(vals) != 3:
                raise PlaneFormatError("header must set q, points, and lines once each", lineno)
            expected = vals["q"] * vals["q"] + vals["q"] + 1
            if vals["points"] != expected or vals["lines"] != expected:
                raise PlaneFormatError(
                    f"header counts must equal q^2+q+1 = {expected} for q={vals['q']}", lineno)
            header = vals
            header_lineno = lineno
            continue
        try:
            idx = tuple(int(tok) for tok in line.split())
        except ValueError:
            raise PlaneFormatError(f"row is not whitespace-separated integers: {line!r}", lineno)
        if len(idx) != header["q"] + 1:
            raise PlaneFormatError(
                f"row has {len(idx)} points, expected q+1 = {header['q'] + 1}", lineno)
        for a, b in zip(idx, idx[1:]):
            if b <= a:
                raise PlaneFormatError("point indices must be strictly increasing", lineno)
        if idx[0] < 0 or idx[-1] >= header["points"]:
            raise PlaneFormatError(
                f"point index out of range 0..{header['points'] - 1}", lineno)
        rows.append(idx)
    if header is None:
        raise PlaneFormatError("empty file: no header found")
    if len(rows) != header["lines"]:
        raise PlaneFormatError(
            f"found {len(rows)} rows, header promised {header['lines']}", header_lineno)
    return Plane(header["q"], rows, provenance=provenance,
                 num_points=header["points"])


def load_plane(path) -> Plane:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_plane_text(fh.read(), provenance=f"file:{path}")
