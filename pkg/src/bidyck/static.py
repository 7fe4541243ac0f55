"""From-scratch and seeded fixpoint computation of the merged graph.

The merge rule: whenever two distinct classes both have a ``(_i`` edge into
the same class, they are Dyck-reachable from each other (through the shared
target) and get merged.  Targets of a class's outgoing edges are never merged
by this rule.
"""

from __future__ import annotations

import logging
from collections import deque
from typing import Iterable

from .graph import InputGraph
from .merged import Group, MergedGraph, quotient
from .partition import DisjointSets

log = logging.getLogger(__name__)


def restore_fixpoint(gm: MergedGraph, seeds: Iterable[Group]) -> MergedGraph:
    """Merge until no seeded (or newly affected) group has two source classes.

    ``seeds`` must cover every group touched since ``gm`` was last at a
    fixpoint.  Stale rep ids in seeds are resolved through ``find``.
    """
    find = gm.ds.find
    queue = deque(seeds)
    merges = 0
    while queue:
        dst, kind = queue.popleft()
        dst = find(dst)
        while len(srcs := gm.sources(dst, kind)) > 1:
            pending = sorted(srcs)
            acc = pending[0]
            for other in pending[1:]:
                acc, other = find(acc), find(other)
                if acc != other:
                    acc, changed = gm.merge_reps(acc, other)
                    queue.extend(changed)
                    merges += 1
            dst = find(dst)
    if merges:
        log.debug("restore_fixpoint: %d merges", merges)
    return gm


def opt_dyck(g: InputGraph) -> MergedGraph:
    """Compute the coarsest merged graph of ``g`` from scratch."""
    gm = quotient(g, DisjointSets(g.node_count))
    return restore_fixpoint(gm, sorted(gm.all_groups()))


def fixpoint_violations(gm: MergedGraph) -> list[Group]:
    """Groups with more than one source class; empty at a fixpoint."""
    return sorted(grp for grp in gm.all_groups() if len(gm.sources(*grp)) > 1)
