"""Finite simple graphs: standard families, induced subgraphs, automorphisms.

Graphs are labeled objects: vertices are the integers 0..v-1 and equality
compares edge sets as given, never isomorphism classes.  Bipartite families
put the first class on the lower indices; downstream census code relies on
that when it splits an embedding image back into vertex classes.

Automorphism groups are counted, not enumerated: the generic path walks a
stabilizer chain (the group order is the product of the orbit sizes of
0, 1, ... under successive pointwise stabilizers), so hitting a factorial
group order costs nothing.  Tagged families are additionally checked against
their closed forms and any disagreement is treated as an internal error.
"""

import math

AUT_SEARCH_MAX = 16  # generic automorphism search bound (desk scale)


class GraphFormatError(ValueError):
    """Malformed graph literal or edge-list file.  Carries a 1-based line
    number when the defect is tied to a file line."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple graph on vertices 0..v-1.

    `family` tags graphs built by :func:`make_family` ("complete",
    "complete_bipartite", "cycle"); `classes` holds the bipartition sizes
    (m, n) with the m-class on indices 0..m-1.  Stars are complete bipartite
    graphs with m = 1.
    """

    def __init__(self, num_vertices: int, edges, family: str | None = None,
                 classes: tuple[int, int] | None = None, label: str | None = None):
        if num_vertices < 0:
            raise ValueError("vertex count must be non-negative")
        canon = []
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u} (graphs here are simple)")
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge ({u},{v}) leaves vertex range 0..{num_vertices - 1}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
            canon.append(e)
        canon.sort()
        self.num_vertices = num_vertices
        self.edges = tuple(canon)
        self.family = family
        self.classes = classes
        adj = [0] * num_vertices
        for u, v in canon:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.adj = tuple(adj)
        self.label = label if label is not None else f"graph(v={num_vertices},e={len(canon)})"
        if family == "complete_bipartite":
            m, n = classes
            assert m + n == num_vertices and len(canon) == m * n
            assert all(u < m <= v for u, v in canon)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        mask = self.adj[v]
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.num_vertices == other.num_vertices
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.num_vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.label})"


# -- standard families -------------------------------------------------------


def make_family(kind: str, *params: int) -> Graph:
    """Build a tagged family graph.

    kinds: "complete" n; "complete_bipartite" m n; "cycle" s; "star" n
    (a star is returned as the complete bipartite graph K_{1,n}).
    Class order for bipartite graphs is canonicalized to m <= n.
    """
    if kind == "complete":
        (n,) = params
        if n < 1:
            raise ValueError("complete graph needs n >= 1")
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
        return Graph(n, edges, family="complete", label=f"K_{n}")
    if kind == "complete_bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise ValueError("complete bipartite graph needs m, n >= 1")
        m, n = (m, n) if m <= n else (n, m)
        edges = [(u, m + v) for u in range(m) for v in range(n)]
        return Graph(m + n, edges, family="complete_bipartite", classes=(m, n),
                     label=f"K_{{{m},{n}}}")
    if kind == "cycle":
        (s,) = params
        if s < 3:
            raise ValueError("cycle needs s >= 3")
        edges = [(i, (i + 1) % s) for i in range(s)]
        return Graph(s, edges, family="cycle", label=f"C_{s}")
    if kind == "star":
        (n,) = params
        return make_family("complete_bipartite", 1, n)
    raise ValueError(f"unknown graph family {kind!r}")


def full_subgraph(graph: Graph, vertices) -> Graph:
    """Induced subgraph on a vertex subset, relabeled onto 0..|S|-1 in the
    sorted order of the subset.  The result is untagged; applying the
    function again with the full vertex range reproduces it exactly.
    """
    vs = sorted(set(vertices))
    if vs and not (0 <= vs[0] and vs[-1] < graph.num_vertices):
        raise ValueError("vertex subset leaves the graph")
    pos = {v: i for i, v in enumerate(vs)}
    edges = [(pos[u], pos[v]) for u, v in graph.edges if u in pos and v in pos]
    return Graph(len(vs), edges)


# -- automorphism counting ---------------------------------------------------


def _stable_colors(graph: Graph) -> tuple[int, ...]:
    """Iterated (color, sorted neighbor colors) refinement to a fixpoint.
    Automorphisms preserve these colors, so they prune the orbit searches."""
    n = graph.num_vertices
    colors = [graph.degree(v) for v in range(n)]
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in graph.neighbors(v))))
                for v in range(n)]
        table = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [table[sig] for sig in sigs]
        if len(set(new)) == len(set(colors)):
            return tuple(new)
        colors = new


def _extension_exists(graph: Graph, colors, image: list[int], used: int) -> bool:
    """True when the injective partial vertex map `image` (-1 = unassigned)
    completes to a full automorphism.  Straight DFS over the first unassigned
    vertex; color equality and adjacency against assigned vertices prune."""
    v = next((i for i, im in enumerate(image) if im < 0), None)
    if v is None:
        return True
    adj = graph.adj
    for u in range(graph.num_vertices):
        if (used >> u) & 1 or colors[u] != colors[v]:
            continue
        ok = True
        for w, iw in enumerate(image):
            if iw >= 0 and ((adj[v] >> w) & 1) != ((adj[u] >> iw) & 1):
                ok = False
                break
        if not ok:
            continue
        image[v] = u
        if _extension_exists(graph, colors, image, used | (1 << u)):
            image[v] = -1
            return True
        image[v] = -1
    return False


def _aut_count_search(graph: Graph) -> int:
    """Group order by stabilizer chain: the product over v = 0, 1, ... of the
    orbit size of v in the subgroup fixing 0..v-1 pointwise."""
    n = graph.num_vertices
    if n == 0:
        return 1
    colors = _stable_colors(graph)
    count = 1
    for v in range(n):
        orbit = 0
        for u in range(n):
            if colors[u] != colors[v]:
                continue
            image = [-1] * n
            used = 0
            for w in range(v):  # pin the chain prefix pointwise
                image[w] = w
                used |= 1 << w
            if (used >> u) & 1:
                continue
            image[v] = u
            if _extension_exists(graph, colors, image, used | (1 << u)):
                orbit += 1
        count *= orbit
    return count


def _closed_form_aut(graph: Graph) -> int | None:
    if graph.family == "complete":
        return math.factorial(graph.num_vertices)
    if graph.family == "complete_bipartite":
        m, n = graph.classes
        if m == n:
            return 2 * math.factorial(n) ** 2
        return math.factorial(m) * math.factorial(n)
    if graph.family == "cycle":
        return 2 * graph.num_vertices
    return None


def automorphism_count(graph: Graph) -> int:
    """Exact automorphism group order.

    Runs the generic stabilizer-chain search (vertex bound AUT_SEARCH_MAX)
    and, for tagged families, checks the result against the closed form
    (n! / m!n! / 2(n!)^2 / 2s); a mismatch means one of the two paths is
    broken and raises RuntimeError.  Tagged graphs beyond the vertex bound
    fall back to the closed form alone.
    """
    closed = _closed_form_aut(graph)
    if graph.num_vertices > AUT_SEARCH_MAX:
        if closed is not None:
            return closed
        raise ValueError(
            f"generic automorphism search is limited to {AUT_SEARCH_MAX} vertices")
    searched = _aut_count_search(graph)
    if closed is not None and searched != closed:
        raise RuntimeError(
            f"internal error: automorphism search found {searched} for "
            f"{graph.label} but the closed form gives {closed}")
    return searched


# -- parsing -----------------------------------------------------------------


def parse_graph_literal(text: str) -> Graph:
    """Parse a CLI graph literal: Kn:4, Kmn:2,3, or C:5."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise GraphFormatError(f"not a graph literal: {text!r} (expected Kn:4, Kmn:2,3, or C:5)")
    try:
        nums = [int(tok) for tok in rest.split(",")]
    except ValueError:
        raise GraphFormatError(f"graph literal parameters must be integers: {text!r}")
    if head == "Kn" and len(nums) == 1:
        return make_family("complete", nums[0])
    if head == "Kmn" and len(nums) == 2:
        return make_family("complete_bipartite", *nums)
    if head == "C" and len(nums) == 1:
        return make_family("cycle", nums[0])
    raise GraphFormatError(
        f"bad graph literal {text!r}: use Kn:<n>, Kmn:<m>,<n>, or C:<s>")


def parse_graph_text(text: str) -> Graph:
    """Parse the edge-list file format: a `graph v=<n>` header line, then one
    `u v` pair per line.  `#` starts a comment anywhere; blank lines are
    skipped.  The result is untagged."""
    num_vertices = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if num_vertices is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "graph":
                raise GraphFormatError("expected header 'graph v=<n>'", lineno)
            key, _, num = parts[1].partition("=")
            if key != "v" or not num.isdigit():
                raise GraphFormatError(f"bad header field {parts[1]!r}", lineno)
            num_vertices = int(num)
            continue
        toks = line.split()
        if len(toks) != 2:
            raise GraphFormatError(f"expected an edge 'u v', got {line!r}", lineno)
        try:
            u, v = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"edge endpoints must be integers: {line!r}", lineno)
        try:
            Graph(num_vertices, [(u, v)])  # reuse the range/loop validation
        except ValueError as err:
            raise GraphFormatError(str(err), lineno)
        if (min(u, v), max(u, v)) in edges:
            raise GraphFormatError(f"duplicate edge ({u},{v})", lineno)
        edges.append((min(u, v), max(u, v)))
    if num_vertices is None:
        raise GraphFormatError("empty file: no header found")
    return Graph(num_vertices, edges)


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph_text(fh.read())
