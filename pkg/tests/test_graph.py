"""Graph families, induced subgraphs, automorphism counts, parsers."""

import math

import pytest

from pgembed.graph import (
    AUT_SEARCH_MAX,
    Graph,
    GraphFormatError,
    automorphism_count,
    _aut_count_search,
    full_subgraph,
    load_graph,
    make_family,
    parse_graph_literal,
    parse_graph_text,
)

import oracles


# ---------------------------------------------------------------------------
# families


def test_complete_graph_counts():
    g = make_family("complete", 4)
    assert g.num_vertices == 4 and g.num_edges == 6
    assert g.label == "K_4" and g.family == "complete"
    assert all(g.degree(v) == 3 for v in range(4))


def test_complete_bipartite_counts_and_classes():
    g = make_family("complete_bipartite", 2, 3)
    assert g.num_vertices == 5 and g.num_edges == 6
    assert g.classes == (2, 3) and g.label == "K_{2,3}"
    assert [g.degree(v) for v in range(5)] == [3, 3, 2, 2, 2]
    assert all(u < 2 <= v for u, v in g.edges)


def test_bipartite_class_order_is_canonicalized():
    assert make_family("complete_bipartite", 3, 2) == make_family("complete_bipartite", 2, 3)
    assert make_family("complete_bipartite", 3, 2).label == "K_{2,3}"


def test_cycle_counts():
    g = make_family("cycle", 5)
    assert g.num_vertices == 5 and g.num_edges == 5
    assert all(g.degree(v) == 2 for v in range(5))
    assert g.label == "C_5"


def test_star_is_complete_bipartite_one_n():
    g = make_family("star", 4)
    assert g.num_vertices == 5 and g.num_edges == 4
    assert g.family == "complete_bipartite" and g.classes == (1, 4)
    assert g.label == "K_{1,4}"
    assert g.degree(0) == 4


@pytest.mark.parametrize(
    "kind,params",
    [("complete", (0,)), ("complete_bipartite", (0, 3)), ("complete_bipartite", (2, 0)),
     ("cycle", (2,)), ("star", (0,)), ("pentagram", (5,))],
)
def test_family_parameter_errors(kind, params):
    with pytest.raises(ValueError):
        make_family(kind, *params)


def test_graph_validation():
    with pytest.raises(ValueError, match="loop"):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(ValueError, match="range"):
        Graph(3, [(0, 3)])
    g = Graph(4, [(2, 0), (3, 1)])
    assert g.edges == ((0, 2), (1, 3))  # normalized and sorted


def test_labeled_equality():
    # C_4 and K_{2,2} are isomorphic but carry different labelings
    assert make_family("cycle", 4) != make_family("complete_bipartite", 2, 2)
    assert Graph(3, [(0, 1)]) == Graph(3, [(1, 0)])
    assert hash(Graph(3, [(0, 1)])) == hash(Graph(3, [(1, 0)]))


# ---------------------------------------------------------------------------
# induced subgraphs


def test_full_subgraph_of_complete_is_complete():
    g = full_subgraph(make_family("complete", 4), [0, 2, 3])
    assert g == Graph(3, [(0, 1), (0, 2), (1, 2)])


def test_full_subgraph_of_one_class_is_edgeless():
    g = make_family("complete_bipartite", 2, 3)
    assert full_subgraph(g, [2, 3, 4]).num_edges == 0
    assert full_subgraph(g, [0, 1]).num_edges == 0


def test_full_subgraph_of_cycle_piece_is_path():
    g = full_subgraph(make_family("cycle", 5), [1, 2, 3])
    assert g.num_vertices == 3 and g.edges == ((0, 1), (1, 2))


def test_full_subgraph_relabels_by_sorted_position():
    g = Graph(6, [(1, 4), (4, 5), (1, 5), (0, 2)])
    sub = full_subgraph(g, {5, 1, 4})
    assert sub == Graph(3, [(0, 1), (1, 2), (0, 2)])


def test_full_subgraph_idempotent_on_identity_subset():
    g = make_family("complete_bipartite", 2, 3)
    once = full_subgraph(g, [0, 2, 3])
    again = full_subgraph(once, range(once.num_vertices))
    assert again == once and again.edges == once.edges


def test_full_subgraph_range_check():
    with pytest.raises(ValueError):
        full_subgraph(make_family("complete", 4), [3, 4])
    assert full_subgraph(make_family("complete", 4), []).num_vertices == 0


# ---------------------------------------------------------------------------
# automorphism counts


def test_worked_examples():
    assert automorphism_count(make_family("complete", 4)) == 24
    assert automorphism_count(make_family("complete_bipartite", 2, 3)) == 12
    assert automorphism_count(make_family("cycle", 5)) == 10


def test_generic_search_matches_closed_forms_exhaustively():
    """Every tagged family up to 10 vertices, both paths, must agree."""
    for n in range(1, 11):
        g = make_family("complete", n)
        assert _aut_count_search(g) == math.factorial(n)
    for m in range(1, 10):
        for n in range(m, 11 - m):
            g = make_family("complete_bipartite", m, n)
            expect = 2 * math.factorial(n) ** 2 if m == n else math.factorial(m) * math.factorial(n)
            assert _aut_count_search(g) == expect, (m, n)
    for s in range(3, 11):
        assert _aut_count_search(make_family("cycle", s)) == 2 * s


@pytest.mark.parametrize(
    "num_vertices,edges",
    [
        (1, []),
        (4, []),  # edgeless: all 4! permutations
        (4, [(0, 1), (1, 2), (2, 3)]),  # path: 2
        (4, [(0, 1), (2, 3)]),  # two disjoint edges: 8
        (4, [(0, 1), (0, 2), (0, 3), (1, 2)]),  # triangle plus a pendant: 2
        (6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),  # two triangles: 72
        (7, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (5, 6)]),  # a lopsided tree
    ],
)
def test_generic_search_matches_permutation_oracle(num_vertices, edges):
    g = Graph(num_vertices, edges)
    assert _aut_count_search(g) == oracles.count_automorphisms_brute(num_vertices, edges)


def test_petersen_graph_automorphisms():
    # outer 5-cycle, inner pentagram, spokes; the group has order 120
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    assert _aut_count_search(Graph(10, edges)) == 120


def test_vertex_bound_enforced_for_untagged_graphs():
    big_path = Graph(17, [(i, i + 1) for i in range(16)])
    with pytest.raises(ValueError, match=str(AUT_SEARCH_MAX)):
        automorphism_count(big_path)
    # tagged families beyond the bound fall back to the closed form
    assert automorphism_count(make_family("complete", 20)) == math.factorial(20)
    assert automorphism_count(make_family("cycle", 30)) == 60


def test_mismatch_between_paths_is_fatal():
    # forge a graph whose tag lies about its structure
    path = Graph(3, [(0, 1), (1, 2)], family="cycle", label="C_3")
    with pytest.raises(RuntimeError, match="internal error"):
        automorphism_count(path)


# ---------------------------------------------------------------------------
# parsing


def test_literal_round_trips():
    assert parse_graph_literal("Kn:4") == make_family("complete", 4)
    assert parse_graph_literal("Kmn:2,3") == make_family("complete_bipartite", 2, 3)
    assert parse_graph_literal("C:5") == make_family("cycle", 5)
    assert parse_graph_literal("Kmn:1,6") == make_family("star", 6)


@pytest.mark.parametrize(
    "text", ["K4", "Kn:", "Kn:2,3", "Kmn:4", "C:a", "Q:3", "Kn:4.0"],
)
def test_bad_literals(text):
    with pytest.raises(GraphFormatError):
        parse_graph_literal(text)


def test_edge_list_round_trip(tmp_path):
    text = "# a square\ngraph v=4\n0 1\n1 2\n2 3\n0 3  # closing edge\n"
    g = parse_graph_text(text)
    assert g == make_family("cycle", 4)
    assert g.family is None  # loaded graphs are untagged
    path = tmp_path / "square.txt"
    path.write_text(text)
    assert load_graph(path) == g


def test_edge_list_allows_isolated_vertices():
    g = parse_graph_text("graph v=5\n0 1\n")
    assert g.num_vertices == 5 and g.num_edges == 1


@pytest.mark.parametrize(
    "text,lineno,phrase",
    [
        ("nodes v=4\n0 1\n", 1, "header"),
        ("graph n=4\n0 1\n", 1, "header field"),
        ("graph v=4\n0 1 2\n", 2, "edge"),
        ("graph v=4\n0 x\n", 2, "integers"),
        ("graph v=4\n1 1\n", 2, "loop"),
        ("graph v=4\n0 4\n", 2, "range"),
        ("graph v=4\n0 1\n1 0\n", 3, "duplicate"),
        ("# only chatter\n", None, "empty"),
    ],
)
def test_edge_list_errors(text, lineno, phrase):
    with pytest.raises(GraphFormatError, match=phrase) as err:
        parse_graph_text(text)
    assert err.value.lineno == lineno
