"""Dynamic bidirected Dyck-reachability over a weighted merged graph."""

from .dynamic import Deletion, DyckEngine, InvariantViolation, backward_sccs, track_cycles
from .graph import (
    DuplicateEdge,
    EdgeRef,
    GraphError,
    GraphSyntaxError,
    InputGraph,
    Label,
    MissingEdge,
    NodeOutOfRange,
    Polarity,
    canonical,
    parse_graph,
    serialize_graph,
)
from .merged import MergedGraph, SameRepresentative, quotient, recount_mismatch
from .oracle import GraphTooLarge, cfl_closure, reach_matrix, rebuild_partition
from .partition import (
    DisjointSets,
    NotARepresentative,
    format_classes,
    partition_fingerprint,
)
from .static import fixpoint_violations, opt_dyck, restore_fixpoint

__all__ = [
    "Deletion",
    "DisjointSets",
    "DuplicateEdge",
    "DyckEngine",
    "EdgeRef",
    "GraphError",
    "GraphSyntaxError",
    "GraphTooLarge",
    "InputGraph",
    "InvariantViolation",
    "Label",
    "MergedGraph",
    "MissingEdge",
    "NodeOutOfRange",
    "NotARepresentative",
    "Polarity",
    "SameRepresentative",
    "backward_sccs",
    "canonical",
    "cfl_closure",
    "fixpoint_violations",
    "format_classes",
    "opt_dyck",
    "parse_graph",
    "partition_fingerprint",
    "reach_matrix",
    "rebuild_partition",
    "recount_mismatch",
    "restore_fixpoint",
    "serialize_graph",
    "track_cycles",
]
