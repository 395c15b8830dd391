"""Embedding census engine: brute-force cross-checks, the line-anchored
fast path, structural classification, constructions, and Singer orbits."""

import itertools
import math

import pytest

import oracles
from pgembed.embed import (
    BaerIntersectionStats,
    Embedding,
    baer_class_construct,
    baer_intersection_stats,
    classify_bipartite_image,
    complement_lines,
    double_star_construct,
    enumerate_embeddings,
    greedy_complete_construct,
    image_of,
    linear_space_check,
    singer_orbit_check,
    star_construct,
    subplane_class_construct,
    two_line_construct,
    two_line_cover,
)
from pgembed.galois import field_make
from pgembed.graph import Graph, make_family
from pgembed.plane import find_arcs, find_subplanes, pg2


def _quadrangle(plane):
    return find_arcs(plane, 4, mode="exists").arcs[0]


# -- Embedding / Image basics ------------------------------------------------


def test_build_produces_validated_embedding(fano):
    pts = _quadrangle(fano)[:3]
    emb = Embedding.build(make_family("complete", 3), fano, pts)
    assert emb.vertex_points == tuple(pts)
    assert len(set(emb.edge_lines)) == 3
    emb.validate()


def test_build_rejects_repeated_points(fano):
    with pytest.raises(ValueError, match="injective"):
        Embedding.build(make_family("complete", 3), fano, (0, 0, 1))


def test_build_rejects_collinear_triangle(fano):
    pts = fano.line_points[0][:3]
    with pytest.raises(ValueError, match="not injective"):
        Embedding.build(make_family("complete", 3), fano, pts)


def test_build_rejects_wrong_point_count(fano):
    with pytest.raises(ValueError, match="size"):
        Embedding.build(make_family("complete", 3), fano, (0, 1))


def test_build_rejects_excessive_degree(fano):
    # a Fano point lies on only three lines, so a hub of degree four is out
    with pytest.raises(ValueError, match="degree"):
        Embedding.build(make_family("star", 4), fano, (0, 1, 2, 3, 4))


def test_image_is_automorphism_invariant(pg3):
    emb = two_line_construct(pg3, 2, 2)
    a, b, c, d = emb.vertex_points
    base = image_of(emb.graph, pg3, (a, b, c, d))
    # swapping inside a class or swapping the classes is an automorphism
    assert image_of(emb.graph, pg3, (b, a, c, d)).key == base.key
    assert image_of(emb.graph, pg3, (c, d, a, b)).key == base.key
    # moving a vertex somewhere else is not
    other = two_line_construct(pg3, 2, 3).vertex_points[-1]
    assert image_of(emb.graph, pg3, (a, b, c, other)).key != base.key


def test_image_carries_sorted_class_points(pg3):
    emb = two_line_construct(pg3, 3, 2)
    img = emb.image()
    sizes = tuple(len(c) for c in img.class_points)
    assert sizes == (2, 3)
    for cls in img.class_points:
        assert cls == tuple(sorted(cls))
    assert img.points == tuple(sorted(img.points))


# -- engine vs brute force -----------------------------------------------------


FANO_BRUTE_CASES = [
    make_family("complete", 3),
    make_family("complete", 4),
    make_family("complete_bipartite", 2, 2),
    make_family("star", 2),
    make_family("star", 3),
    make_family("cycle", 4),
    make_family("cycle", 5),
    make_family("cycle", 6),
]


@pytest.mark.parametrize("graph", FANO_BRUTE_CASES, ids=lambda g: g.label)
def test_census_matches_brute_force_on_fano(fano, graph):
    rep = enumerate_embeddings(graph, fano, mode="list")
    assert rep.N == oracles.count_labeled_embeddings_brute(
        fano, graph.num_vertices, graph.edges)
    assert {img.key for img in rep.images} == oracles.image_keys_brute(
        fano, graph.num_vertices, graph.edges)


@pytest.mark.parametrize("graph", [
    make_family("complete", 3),
    make_family("cycle", 4),
], ids=lambda g: g.label)
def test_census_matches_brute_force_on_order_three(pg3, graph):
    rep = enumerate_embeddings(graph, pg3, mode="list")
    assert rep.N == oracles.count_labeled_embeddings_brute(
        pg3, graph.num_vertices, graph.edges)
    assert {img.key for img in rep.images} == oracles.image_keys_brute(
        pg3, graph.num_vertices, graph.edges)


def test_frozen_fano_image_counts(fano):
    expected = {
        ("complete", (3,)): 28,
        ("complete", (4,)): 7,
        ("complete_bipartite", (2, 2)): 21,
        ("star", (2,)): 84,
        ("cycle", (4,)): 21,
        ("cycle", (5,)): 84,
        ("cycle", (6,)): 56,
        ("cycle", (7,)): 24,
    }
    for (family, params), n in expected.items():
        rep = enumerate_embeddings(make_family(family, *params), fano)
        assert rep.n == n, (family, params)
        assert rep.N == n * rep.aut


# -- marquee bipartite counts (fast path) ---------------------------------------


def test_equal_class_census_counts_point_pairs(fano, pg3, pg4):
    for plane, expected in ((fano, 21), (pg3, 78), (pg4, 210)):
        q = plane.q
        rep = enumerate_embeddings(make_family("complete_bipartite", q, q), plane)
        assert rep.n == expected
        assert rep.n == math.comb(plane.num_points, 2)


def test_one_smaller_class_census_counts(fano, pg3, pg4):
    for plane, expected in ((fano, 84), (pg3, 468), (pg4, 1680)):
        q = plane.q
        rep = enumerate_embeddings(
            make_family("complete_bipartite", q - 1, q), plane)
        assert rep.n == expected


def test_fast_path_agrees_with_general_engine(fano, pg3, pg4):
    cases = [(fano, 2, 2), (pg3, 2, 3), (pg3, 3, 3),
             (pg4, 2, 4), (pg4, 3, 4), (pg4, 4, 4)]
    for plane, m, n in cases:
        graph = make_family("complete_bipartite", m, n)
        fast = enumerate_embeddings(graph, plane, mode="list")
        slow = enumerate_embeddings(graph, plane, mode="list",
                                    force_general=True)
        assert fast.N == slow.N, (m, n)
        assert fast.n == slow.n
        assert [i.sort_key() for i in fast.images] == \
               [i.sort_key() for i in slow.images]
        assert fast.classification == slow.classification


def test_boundary_order_census_splits_into_two_shapes(pg4):
    # at q = 4 the two-point class can sit on a line while the four-point
    # class forms a quadrangle inside an order-2 subplane, so the census is
    # an even split between two-line images and the exceptional ones
    rep = enumerate_embeddings(make_family("complete_bipartite", 2, 4), pg4,
                               mode="list")
    assert rep.n == 5040
    assert rep.classification["two_lines"] == 2520
    assert rep.classification["class_status"] == {
        "collinear|collinear": 2520,
        "collinear|other": 2520,
    }


def test_star_census_reports_collinear_leaf_subtotal(pg3):
    rep = enumerate_embeddings(make_family("star", 3), pg3, mode="list")
    assert rep.n == 1404
    tallies = rep.classification["class_status"]
    assert tallies["collinear|collinear"] == 468
    assert tallies["collinear|other"] == 936
    assert sum(tallies.values()) == rep.n


# -- modes, workers, orderings ---------------------------------------------------


def test_exists_mode_finds_and_validates_a_witness(fano):
    rep = enumerate_embeddings(make_family("complete", 4), fano, mode="exists")
    assert rep.found is True
    assert rep.N is None and rep.n is None
    rep.witness.validate()
    assert len(rep.images) == 1


def test_exists_mode_reports_absence(fano):
    rep = enumerate_embeddings(make_family("complete_bipartite", 2, 3), fano,
                               mode="exists")
    assert rep.found is False
    assert rep.witness is None and rep.images == ()


def test_oversized_class_census_is_empty(fano, pg4):
    rep = enumerate_embeddings(make_family("complete_bipartite", 2, 3), fano)
    assert rep.N == 0 and rep.n == 0 and rep.found is False
    rep = enumerate_embeddings(make_family("complete_bipartite", 2, 5), pg4)
    assert rep.N == 0


def test_degree_guard_shortcuts_impossible_stars(fano):
    rep = enumerate_embeddings(make_family("star", 4), fano, mode="list")
    assert rep.N == 0 and rep.images == ()


def test_too_many_vertices_is_rejected(fano):
    with pytest.raises(ValueError, match="inject"):
        enumerate_embeddings(make_family("cycle", 8), fano)


def test_parameter_validation(fano):
    g = make_family("complete", 3)
    with pytest.raises(ValueError, match="mode"):
        enumerate_embeddings(g, fano, mode="tally")
    with pytest.raises(ValueError, match="order"):
        enumerate_embeddings(g, fano, vertex_order="random")
    with pytest.raises(ValueError, match="workers"):
        enumerate_embeddings(g, fano, workers=0)


def test_worker_count_does_not_change_results(pg3):
    g = make_family("complete", 4)
    one = enumerate_embeddings(g, pg3, mode="list", workers=1)
    three = enumerate_embeddings(g, pg3, mode="list", workers=3)
    assert one.N == three.N
    assert [i.sort_key() for i in one.images] == \
           [i.sort_key() for i in three.images]


def test_vertex_order_does_not_change_results(fano):
    g = make_family("cycle", 5)
    auto = enumerate_embeddings(g, fano, mode="list")
    index = enumerate_embeddings(g, fano, mode="list", vertex_order="index")
    assert auto.N == index.N
    assert [i.sort_key() for i in auto.images] == \
           [i.sort_key() for i in index.images]


def test_report_json_shape(fano):
    rep = enumerate_embeddings(make_family("complete", 3), fano)
    d = rep.to_json_dict()
    assert d["schema_version"] == 1
    assert d["graph"] == "K_3" and d["plane"] == "PG(2,2)"
    assert d["N"] == 168 and d["n"] == 28 and d["aut"] == 6
    assert d["found"] is True


# -- classification primitives ---------------------------------------------------


def test_two_line_cover_small_and_collinear_sets(pg3):
    assert two_line_cover(pg3, pg3.line_points[0])
    assert two_line_cover(pg3, (0, 1, 2, 5))  # four points always fit
    both = list(pg3.line_points[0]) + list(pg3.line_points[1])
    assert two_line_cover(pg3, both)


def test_two_line_cover_rejects_arcs(pg4):
    arc = find_arcs(pg4, 5, mode="exists").arcs[0]
    assert not two_line_cover(pg4, arc)  # two lines hold at most 4 arc points


def test_classify_two_line_image(pg3):
    cls = classify_bipartite_image(two_line_construct(pg3, 2, 3).image(), pg3)
    assert [s.status for s in cls.class_status] == ["collinear", "collinear"]
    assert cls.two_lines


def test_classify_baer_image(pg4):
    w = find_subplanes(pg4, 2, mode="exists").witnesses[0]
    cls = classify_bipartite_image(baer_class_construct(pg4, w).image(), pg4)
    assert [s.status for s in cls.class_status] == ["collinear", "other"]
    assert not cls.two_lines


def test_classify_recognizes_exact_subplane_class(pg4):
    # direct geometric check: a class that is precisely a subplane point set
    w = find_subplanes(pg4, 2, mode="exists").witnesses[0]
    outside = tuple(p for p in range(pg4.num_points) if p not in w.points)[:2]
    img = image_of(make_family("complete_bipartite", 2, 7), pg4,
                   outside + w.points)
    cls = classify_bipartite_image(img, pg4)
    assert cls.class_status[1].status == "subplane"
    assert cls.class_status[1].order == 2


def test_classify_requires_class_data(fano):
    img = image_of(make_family("complete", 3), fano, _quadrangle(fano)[:3])
    with pytest.raises(ValueError, match="class"):
        classify_bipartite_image(img, fano)


# -- complement lines and linear spaces -------------------------------------------


def test_complement_lines_of_two_line_image(pg3):
    emb = two_line_construct(pg3, 2, 2)
    comp = complement_lines(emb)
    assert len(comp) == 2  # one line per class pair
    assert not set(comp) & set(emb.edge_lines)


def test_complete_graph_has_no_complement(fano):
    emb = greedy_complete_construct(fano, 4)
    assert complement_lines(emb) == ()


def test_collinear_star_leaves_share_one_complement_line(pg3):
    emb = star_construct(pg3, 3)
    comp = complement_lines(emb)
    assert len(comp) == 1  # the leaves sit together on the missed line


def test_linear_space_of_the_whole_plane(fano):
    rep = linear_space_check(range(7), range(7), fano)
    assert rep.ok and rep.v == 7 and rep.b == 7
    assert rep.bound_holds and rep.equality_case == "projective-plane"


def test_linear_space_near_pencil(pg3):
    base = pg3.line_points[0]
    off = next(p for p in range(pg3.num_points) if p not in base)
    lines = {0} | {pg3.line_through(off, p) for p in base}
    rep = linear_space_check(list(base) + [off], sorted(lines), pg3)
    assert rep.ok and rep.v == rep.b == 5
    assert rep.equality_case == "near-pencil"


def test_linear_space_single_line_is_degenerate(pg3):
    rep = linear_space_check(pg3.line_points[0], [0], pg3)
    assert rep.ok and rep.degenerate and rep.bound_holds is None


def test_linear_space_reports_uncovered_pair(pg3):
    base = pg3.line_points[0]
    off = next(p for p in range(pg3.num_points) if p not in base)
    lines = {pg3.line_through(off, p) for p in base}  # base line left out
    rep = linear_space_check(list(base) + [off], sorted(lines), pg3)
    assert not rep.ok
    a, b = rep.violation_pair
    assert pg3.line_through(a, b) not in lines


def test_linear_space_reports_thin_line(pg3):
    pts = pg3.line_points[0]
    thin = next(l for l in range(pg3.num_lines)
                if (pg3.line_point_mask[l]
                    & sum(1 << p for p in pts)).bit_count() < 2)
    rep = linear_space_check(pts, [0, thin], pg3)
    assert not rep.ok and rep.thin_line == thin


# -- constructions ----------------------------------------------------------------


def test_two_line_construct_shape(pg5):
    emb = two_line_construct(pg5, 3, 5)
    emb.validate()
    img = emb.image()
    for cls in img.class_points:
        assert pg5.collinear(cls)
    assert two_line_cover(pg5, img.points)


def test_two_line_construct_rejects_oversized_class(pg3):
    with pytest.raises(ValueError, match="exceeds"):
        two_line_construct(pg3, 2, 4)
    with pytest.raises(ValueError, match=">= 1"):
        two_line_construct(pg3, 0, 2)


def test_star_construct_both_regimes(pg3):
    small = star_construct(pg3, 3)
    hub, *leaves = small.vertex_points
    assert pg3.collinear(leaves)
    assert hub not in pg3.line_points[pg3.line_through(leaves[0], leaves[1])]

    full = star_construct(pg3, 4)  # n = q+1: one leaf per line through the hub
    full.validate()
    assert len(set(full.edge_lines)) == pg3.q + 1

    with pytest.raises(ValueError, match="q\\+1"):
        star_construct(pg3, 5)


def test_double_star_construct_reaches_degree_bound(pg4):
    emb = double_star_construct(pg4)
    emb.validate()
    g = emb.graph
    degrees = sorted(g.degree(v) for v in range(g.num_vertices))
    assert degrees[-2:] == [pg4.q + 1, pg4.q + 1]
    assert all(d == 2 for d in degrees[:-2])


def test_greedy_complete_construct_small_and_large():
    fano = pg2(field_make(2))
    emb = greedy_complete_construct(fano, 4)
    emb.validate()

    pg11 = pg2(field_make(11))
    big = greedy_complete_construct(pg11, 5)
    big.validate()
    assert big.graph.label == "K_5"

    with pytest.raises(ValueError, match="order"):
        greedy_complete_construct(pg2(field_make(7)), 5)
    with pytest.raises(ValueError, match="order"):
        greedy_complete_construct(pg11, 6)


def test_baer_class_construct_on_order_nine(pg9):
    w = find_subplanes(pg9, 3, mode="exists").witnesses[0]
    emb = baer_class_construct(pg9, w)
    emb.validate()
    assert emb.graph.classes == (6, 9)
    big = emb.vertex_points[6:]
    assert not pg9.collinear(big)


def test_baer_class_construct_rejects_improper_witness(fano):
    w = find_subplanes(fano, 2, mode="exists").witnesses[0]  # the plane itself
    with pytest.raises(ValueError, match="Baer"):
        baer_class_construct(fano, w)


# -- subplane-class search ----------------------------------------------------------


def test_subplane_class_search_distinguishes_no_subplane(pg7):
    res = subplane_class_construct(pg7, 2)
    assert res.found is False
    assert res.reason == "no-subplane"
    assert res.witnesses_tried == 0


def test_subplane_class_search_preconditions(pg4, pg7):
    with pytest.raises(ValueError, match="order"):
        subplane_class_construct(pg4, 2)  # big class of 7 needs q >= 7
    with pytest.raises(ValueError, match=">= 2"):
        subplane_class_construct(pg7, 1)


# -- Baer intersection statistics -----------------------------------------------------


def test_intersection_stats_inside_a_witness(pg4):
    w = find_subplanes(pg4, 2, mode="exists").witnesses[0]
    quad = next(pts for pts in itertools.combinations(w.points, 4)
                if oracles.no_three_collinear(pg4, pts))
    img = image_of(make_family("complete_bipartite", 2, 2), pg4, quad)
    stats = baer_intersection_stats(img, pg4, [w])
    assert stats == BaerIntersectionStats(1, 4, 4, 4, 4)


def test_intersection_stats_bound_on_full_census_image(pg4):
    witnesses = find_subplanes(pg4, 2, mode="list").witnesses
    assert len(witnesses) == 360
    rep = enumerate_embeddings(make_family("complete_bipartite", 4, 4), pg4,
                               mode="list")
    stats = baer_intersection_stats(rep.images[0], pg4, witnesses)
    assert stats.max_points <= 4
    assert stats.min_edge_lines >= 2


def test_intersection_stats_need_witnesses(pg4):
    img = image_of(make_family("complete_bipartite", 2, 2), pg4,
                   find_arcs(pg4, 4, mode="exists").arcs[0])
    with pytest.raises(ValueError, match="witness"):
        baer_intersection_stats(img, pg4, [])


# -- Singer orbits -----------------------------------------------------------------


def test_singer_orbits_are_free_for_coprime_sizes(fano):
    rep = enumerate_embeddings(make_family("complete", 3), fano, mode="list")
    sr = singer_orbit_check(make_family("complete", 3), fano, rep.images)
    assert sr.m == 7 and sr.num_images == 28
    assert sr.hypothesis_met and sr.free
    assert sr.orbit_sizes == (7,)
    assert sr.divisible and sr.weak_divisible


def test_singer_orbits_on_quadrilaterals(fano):
    rep = enumerate_embeddings(make_family("cycle", 4), fano, mode="list")
    sr = singer_orbit_check(make_family("cycle", 4), fano, rep.images)
    assert sr.free and sr.divisible
    assert sr.num_images == 21


def test_singer_weak_divisibility_when_hypothesis_fails(fano):
    # C_7 on the Fano plane: 7 | v and 7 | e, the action has fixed images
    # (the Singer polygon itself), and 7 does not divide n = 24 -- only the
    # weak bound (m/d) | n survives
    rep = enumerate_embeddings(make_family("cycle", 7), fano, mode="list")
    sr = singer_orbit_check(make_family("cycle", 7), fano, rep.images)
    assert not sr.hypothesis_met
    assert sr.d == 7
    assert not sr.free
    assert sr.orbit_sizes == (1, 7)
    assert not sr.divisible
    assert sr.weak_divisible


def test_singer_check_detects_truncated_census(fano):
    rep = enumerate_embeddings(make_family("complete", 3), fano, mode="list")
    with pytest.raises(ValueError, match="closed"):
        singer_orbit_check(make_family("complete", 3), fano, rep.images[1:])
