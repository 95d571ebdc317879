"""Rainbow-broom-free colorings: constructions, detectors, exhaustive verifiers."""

from .core import (
    ColoredGraph,
    ColorClassPartition,
    DetectorDisagreementError,
    EdgeColoring,
    Graph,
    InstanceTooLargeError,
    color_classes,
    colored_disjoint_union,
    colored_graph_from_json_dict,
    colored_graph_to_json_dict,
    complement,
    complete_graph,
    cycle_graph,
    delete_color_class,
    disjoint_union,
    empty_graph,
    graph_from_json_dict,
    graph_to_json_dict,
    is_proper,
    to_dot,
)
from .brooms import (
    BroomSpec,
    RainbowCertificate,
    TreeEmbedding,
    build_broom,
    certificate_from_json_dict,
    find_rainbow_broom2,
    find_rainbow_tree,
    verify_certificate,
)
from .colorings import (
    FactorizationKind,
    k_edge_color,
    near_one_factorization,
    one_factorization,
)
from .constructions import (
    GoodSubgraph,
    Regime,
    are_isomorphic,
    construct_deleted_class,
    construct_even_large,
    construct_even_small,
    construct_odd,
    enumerate_good_subgraphs,
    good_subgraph,
    theorem_slope,
)
from .oracle import (
    SearchReport,
    ex_star_bruteforce,
    exists_rainbow_free_coloring,
    verify_construction,
    verify_no_k_minus_1,
)

__all__ = [
    "BroomSpec",
    "ColorClassPartition",
    "ColoredGraph",
    "DetectorDisagreementError",
    "EdgeColoring",
    "FactorizationKind",
    "GoodSubgraph",
    "Graph",
    "InstanceTooLargeError",
    "RainbowCertificate",
    "Regime",
    "SearchReport",
    "TreeEmbedding",
    "are_isomorphic",
    "build_broom",
    "certificate_from_json_dict",
    "color_classes",
    "colored_disjoint_union",
    "colored_graph_from_json_dict",
    "colored_graph_to_json_dict",
    "complement",
    "complete_graph",
    "construct_deleted_class",
    "construct_even_large",
    "construct_even_small",
    "construct_odd",
    "cycle_graph",
    "delete_color_class",
    "disjoint_union",
    "empty_graph",
    "enumerate_good_subgraphs",
    "ex_star_bruteforce",
    "exists_rainbow_free_coloring",
    "find_rainbow_broom2",
    "find_rainbow_tree",
    "good_subgraph",
    "graph_from_json_dict",
    "graph_to_json_dict",
    "is_proper",
    "k_edge_color",
    "near_one_factorization",
    "one_factorization",
    "theorem_slope",
    "to_dot",
    "verify_certificate",
    "verify_construction",
    "verify_no_k_minus_1",
]
