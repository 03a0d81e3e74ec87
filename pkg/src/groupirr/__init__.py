"""Irregular edge labellings of connected graphs over finite Abelian groups.

The library computes the group irregularity strength of a connected graph,
constructs certified irregular labellings over arbitrary finite Abelian
groups, pairs marked tree vertices with minimum total path length in linear
time, and settles small existence questions by exhaustive search.
"""

from .graphs import (
    Labelling,
    RootedTree,
    SimpleGraph,
    apply_phi,
    build_graph,
    complete_graph,
    cycle_graph,
    is_connected,
    path_graph,
    random_connected_graph,
    random_tree,
    read_edge_list,
    spanning_tree_prefer_nonstar,
    star_graph,
    tree_path,
)
from .groups import (
    AbelianGroup,
    ElementClassification,
    format_element,
    make_group,
    parse_element,
    parse_group_spec,
)
from .labeller import (
    ConstructionError,
    LabellingImpossible,
    StrengthResult,
    group_irregularity_strength,
    is_exceptional_group,
    label_graph,
    label_star,
    label_tree,
)
from .path_collection import (
    PathCollection,
    matching_oracle,
    shortest_path_collection,
    spc_lower_bound,
)
from .verifier import (
    BudgetExceeded,
    Certificate,
    DegreeReport,
    InconsistencyError,
    brute_force_exists,
    certify_or_refute,
    enumerate_abelian_groups,
    predict_labelling_exists,
    weighted_degrees,
)

__all__ = [
    "AbelianGroup",
    "BudgetExceeded",
    "Certificate",
    "ConstructionError",
    "DegreeReport",
    "ElementClassification",
    "Labelling",
    "LabellingImpossible",
    "PathCollection",
    "RootedTree",
    "SimpleGraph",
    "StrengthResult",
    "apply_phi",
    "brute_force_exists",
    "build_graph",
    "certify_or_refute",
    "complete_graph",
    "cycle_graph",
    "enumerate_abelian_groups",
    "format_element",
    "group_irregularity_strength",
    "is_connected",
    "is_exceptional_group",
    "label_graph",
    "label_star",
    "label_tree",
    "make_group",
    "matching_oracle",
    "parse_element",
    "parse_group_spec",
    "path_graph",
    "predict_labelling_exists",
    "random_connected_graph",
    "random_tree",
    "read_edge_list",
    "shortest_path_collection",
    "spanning_tree_prefer_nonstar",
    "spc_lower_bound",
    "star_graph",
    "tree_path",
    "weighted_degrees",
]
