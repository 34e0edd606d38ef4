"""Tail completion for split, threshold, quasi-threshold and P4-sparse graphs."""

from .graph import (
    Graph,
    GraphFormatError,
    PatternKind,
    connected_components,
    count_induced_p4_in_5set,
    find_induced,
    format_graph,
    induced_subgraph,
    parse_graph,
)
from .oracles import (
    GraphClass,
    InstanceTooLargeError,
    LimitExceededError,
    OracleResult,
    is_member,
    min_completion,
    min_completion_for_tail,
)
from .recognizers import (
    NotInClassError,
    NotP4SparseError,
    NotQTError,
    NotSplitError,
    NotThresholdError,
    P4SparseTree,
    PathPartition,
    QTTree,
    SpiderDescriptor,
    SplitPartition,
    ThresholdTree,
    p4_sparse_tree,
    path_partition,
    qt_tree,
    spider_partition,
    split_partition,
    threshold_tree,
)
from .tail import (
    Candidate,
    CompletionResult,
    candidate_costs,
    p4_tail,
    qt_tail,
    split_tail,
    thick_spider_cost,
    thin_spider_cost,
    threshold_tail,
)
from .generators import GenSpec, SplitMix64, generate, gnp_graph, pick_tail_vertex

__all__ = [
    "Graph",
    "GraphFormatError",
    "PatternKind",
    "connected_components",
    "count_induced_p4_in_5set",
    "find_induced",
    "format_graph",
    "induced_subgraph",
    "parse_graph",
    "GraphClass",
    "InstanceTooLargeError",
    "LimitExceededError",
    "OracleResult",
    "is_member",
    "min_completion",
    "min_completion_for_tail",
    "NotInClassError",
    "NotP4SparseError",
    "NotQTError",
    "NotSplitError",
    "NotThresholdError",
    "P4SparseTree",
    "PathPartition",
    "QTTree",
    "SpiderDescriptor",
    "SplitPartition",
    "ThresholdTree",
    "p4_sparse_tree",
    "path_partition",
    "qt_tree",
    "spider_partition",
    "split_partition",
    "threshold_tree",
    "Candidate",
    "CompletionResult",
    "candidate_costs",
    "p4_tail",
    "qt_tail",
    "split_tail",
    "thick_spider_cost",
    "thin_spider_cost",
    "threshold_tail",
    "GenSpec",
    "SplitMix64",
    "generate",
    "gnp_graph",
    "pick_tail_vertex",
]
