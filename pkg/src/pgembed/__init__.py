"""pgembed: exhaustive census toolkit for graph embeddings in finite
projective planes.

The package builds classical planes PG(2, q) from Galois fields, loads
arbitrary planes from incidence files, enumerates embeddings of small graph
families (complete, complete bipartite, cycles, stars) by exact backtracking
search, and cross-checks the counts against closed-form identities and
structural dichotomies at small orders.
"""

from .embed import (
    BaerIntersectionStats,
    BipartiteClassification,
    CensusReport,
    Embedding,
    Image,
    LinearSpaceReport,
    SingerOrbitReport,
    SubplaneClassResult,
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
from .formulas import (
    Prediction,
    Verdict,
    checks_for_census,
    embeddability_verdict,
    predict,
)
from .galois import Field, field_make
from .graph import (
    Graph,
    GraphFormatError,
    automorphism_count,
    full_subgraph,
    load_graph,
    make_family,
    parse_graph_literal,
    parse_graph_text,
)
from .plane import (
    ArcSearchResult,
    AxiomReport,
    Plane,
    PlaneFormatError,
    SubplaneSearchResult,
    SubplaneWitness,
    find_arcs,
    find_subplanes,
    load_plane,
    parse_plane_text,
    pg2,
    plane_to_text,
    save_plane,
    singer_cycle,
    subplane_order_of,
    verify_axioms,
)
from .theorems import SUITES, CheckResult, plane_of_order, run_suite

__all__ = [
    "ArcSearchResult",
    "AxiomReport",
    "BaerIntersectionStats",
    "BipartiteClassification",
    "CensusReport",
    "CheckResult",
    "Embedding",
    "Field",
    "Graph",
    "GraphFormatError",
    "Image",
    "LinearSpaceReport",
    "Plane",
    "PlaneFormatError",
    "Prediction",
    "SUITES",
    "SingerOrbitReport",
    "SubplaneClassResult",
    "SubplaneSearchResult",
    "SubplaneWitness",
    "Verdict",
    "automorphism_count",
    "baer_class_construct",
    "baer_intersection_stats",
    "checks_for_census",
    "classify_bipartite_image",
    "complement_lines",
    "double_star_construct",
    "embeddability_verdict",
    "enumerate_embeddings",
    "field_make",
    "find_arcs",
    "find_subplanes",
    "full_subgraph",
    "greedy_complete_construct",
    "image_of",
    "linear_space_check",
    "load_graph",
    "load_plane",
    "make_family",
    "parse_graph_literal",
    "parse_graph_text",
    "parse_plane_text",
    "pg2",
    "plane_of_order",
    "plane_to_text",
    "predict",
    "run_suite",
    "save_plane",
    "singer_cycle",
    "singer_orbit_check",
    "star_construct",
    "subplane_class_construct",
    "subplane_order_of",
    "two_line_construct",
    "two_line_cover",
    "verify_axioms",
]

__version__ = "0.1.0"
