"""Distinguishing number and distinguishing index of trees and unicyclic graphs."""

from .graph import (
    EdgeLabeling,
    Graph,
    GraphFormatError,
    NotSupportedError,
    Permutation,
    VertexLabeling,
    format_graph,
    is_tree,
    parse_graph,
    unicyclic_cycle,
)
from .tree_dist import (
    ClassificationReport,
    SatCount,
    classify_tree,
    count_edge_classes,
    in_family_T,
    rooted_D,
    tree_D,
    tree_Dprime,
    witness_labelings,
)
from .unicyclic import classify_unicyclic, unicyclic_D, unicyclic_Dprime

__all__ = [
    "ClassificationReport", "EdgeLabeling", "Graph", "GraphFormatError", "NotSupportedError",
    "Permutation", "SatCount", "VertexLabeling", "classify_tree", "classify_unicyclic",
    "count_edge_classes", "format_graph", "in_family_T", "is_tree", "parse_graph", "rooted_D",
    "tree_D", "tree_Dprime", "unicyclic_D", "unicyclic_Dprime", "unicyclic_cycle",
    "witness_labelings",
]
