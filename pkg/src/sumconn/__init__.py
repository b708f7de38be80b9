"""Exact connectivity indices and extremal-family verification for trees
and unicyclic graphs."""

from .bounds import (
    TopTwoBound,
    tree_max_bound,
    unicyclic_bound_profile,
    unicyclic_max_bound,
    unicyclic_top_two,
)
from .canon import CanonicalCode, canonical_code, canonical_form
from .construct import (
    DeltaRangeError,
    GraphClassSpec,
    attach_path,
    cycle_spider_family,
    spider_family,
    tree_extremal,
    unicyclic_extremal,
)
from .enumeration import enumerate_trees, enumerate_unicyclic
from .graph6 import Graph6Error, emit_graph6, parse_graph6, to_dot
from .graphs import (
    DuplicateEdgeError,
    Graph,
    GraphError,
    NotConnectedError,
    NotUnicyclicError,
    SelfLoopError,
    SizeLimitError,
    VertexRangeError,
    cycle_graph,
    graph_from_edges,
    is_connected,
    is_tree,
    is_unicyclic,
    max_degree,
    path_graph,
    star_graph,
    unique_cycle,
)
from .indices import (
    EdgelessGraphError,
    IndexKind,
    edge_contribution,
    product_connectivity,
    sum_connectivity,
)
from .radicals import RadicalValue, squarefree_decompose
from .transforms import (
    TransformError,
    merge_pendant_paths,
    reattach_to_pendant,
)
from .verify import (
    ExtremalReport,
    FamilyTooSmallError,
    MonotonicityReport,
    SweepResult,
    TopTwoReport,
    chi_r_correlation,
    run_sweeps,
    transform_monotonicity_suite,
    verify_top_two,
    verify_tree_max,
    verify_unicyclic_max,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalCode",
    "DeltaRangeError",
    "DuplicateEdgeError",
    "EdgelessGraphError",
    "ExtremalReport",
    "FamilyTooSmallError",
    "Graph",
    "Graph6Error",
    "GraphClassSpec",
    "GraphError",
    "IndexKind",
    "MonotonicityReport",
    "NotConnectedError",
    "NotUnicyclicError",
    "RadicalValue",
    "SelfLoopError",
    "SizeLimitError",
    "SweepResult",
    "TopTwoBound",
    "TopTwoReport",
    "TransformError",
    "VertexRangeError",
    "attach_path",
    "canonical_code",
    "canonical_form",
    "chi_r_correlation",
    "cycle_graph",
    "cycle_spider_family",
    "edge_contribution",
    "emit_graph6",
    "enumerate_trees",
    "enumerate_unicyclic",
    "graph_from_edges",
    "is_connected",
    "is_tree",
    "is_unicyclic",
    "max_degree",
    "merge_pendant_paths",
    "parse_graph6",
    "path_graph",
    "product_connectivity",
    "reattach_to_pendant",
    "run_sweeps",
    "spider_family",
    "squarefree_decompose",
    "star_graph",
    "sum_connectivity",
    "to_dot",
    "transform_monotonicity_suite",
    "tree_extremal",
    "tree_max_bound",
    "unicyclic_bound_profile",
    "unicyclic_extremal",
    "unicyclic_max_bound",
    "unicyclic_top_two",
    "unique_cycle",
    "verify_top_two",
    "verify_tree_max",
    "verify_unicyclic_max",
]
