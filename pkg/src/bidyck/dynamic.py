"""Dynamic maintenance of the merged graph under edge insertion and deletion.

Insertion adds one source to one group and restores the fixpoint from there.

Deletion of ``u -(i-> v`` first decrements the merged edge out of
``r = find(u)``, then looks at the classes that can reach ``r`` in the merged
graph.  If none of them lies on a cycle, the change can only invalidate
merges upstream of ``r``; classes are re-partitioned by witness connectivity,
cascading backwards.  If a cycle is present, the mutual dependencies between
classes cannot be ordered, so the affected classes are exploded to singletons
and the fixpoint is recomputed from there.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Literal

from .graph import EdgeRef, GraphError, InputGraph, Label, canonical
from .merged import Group, MergedGraph, recount_mismatch
from .partition import DisjointSets, Fingerprint
from .static import fixpoint_violations, opt_dyck, restore_fixpoint

log = logging.getLogger(__name__)

CycleSet = frozenset[int]
Strategy = Literal["dynamic", "rebuild"]
SplitScope = Literal["region", "cycles"]


class InvariantViolation(GraphError, AssertionError):
    pass


def backward_sccs(gm: MergedGraph, root: int) -> tuple[set[int], list[list[int]]]:
    """Tarjan over the reversed merged graph, starting at ``root``.

    Returns the set of classes that can reach ``root`` (``root`` included)
    and the strongly connected components among them.
    """
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    sccs: list[list[int]] = []

    def preds(x: int) -> list[int]:
        return sorted(gm.predecessors(x))

    index[root] = low[root] = 0
    stack.append(root)
    on_stack.add(root)
    frames = [(root, iter(preds(root)))]
    while frames:
        node, it = frames[-1]
        for nxt in it:
            if nxt not in index:
                index[nxt] = low[nxt] = len(index)
                stack.append(nxt)
                on_stack.add(nxt)
                frames.append((nxt, iter(preds(nxt))))
                break
            if nxt in on_stack:
                low[node] = min(low[node], index[nxt])
        else:
            frames.pop()
            if frames:
                parent = frames[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                scc = []
                while True:
                    x = stack.pop()
                    on_stack.discard(x)
                    scc.append(x)
                    if x == node:
                        break
                sccs.append(scc)
    return set(index), sccs


def track_cycles(gm: MergedGraph, r: int) -> CycleSet:
    """Classes on a cycle among those backward-reachable from ``r``.

    A self-loop counts as a cycle.
    """
    gm._require_rep(r)
    return _on_cycles(gm, backward_sccs(gm, r)[1])


def _on_cycles(gm: MergedGraph, sccs: list[list[int]]) -> CycleSet:
    return frozenset(
        x for scc in sccs if len(scc) > 1 or gm.has_self_loop(scc[0]) for x in scc
    )


@dataclass
class Deletion:
    """What a deletion did: which path ran and which classes were split."""

    edge: EdgeRef
    path: Literal["acyclic", "cycles", "rebuild"]
    cycles: CycleSet = frozenset()
    split: list[int] = field(default_factory=list)


class DyckEngine:
    """Bidirected Dyck-reachability under edge updates.

    ``cycle_handling=False`` skips cycle tracking on deletion and always runs
    the acyclic cascade, which leaves spurious merges when the merged graph
    has cycles.  ``strategy="rebuild"`` recomputes everything on each update.
    ``check=True`` verifies the weight recount and the fixpoint after every
    update and raises :class:`InvariantViolation` on drift.
    """

    def __init__(
        self,
        graph: InputGraph,
        *,
        cycle_handling: bool = True,
        strategy: Strategy = "dynamic",
        split_scope: SplitScope = "region",
        check: bool = False,
    ) -> None:
        if strategy not in ("dynamic", "rebuild"):
            raise ValueError(f"unknown strategy {strategy!r}")
        if split_scope not in ("region", "cycles"):
            raise ValueError(f"unknown split scope {split_scope!r}")
        self.g = graph.copy()
        self.cycle_handling = cycle_handling
        self.strategy = strategy
        self.split_scope = split_scope
        self.check = check
        self.gm = opt_dyck(self.g)
        self._verify()

    @property
    def ds(self) -> DisjointSets:
        return self.gm.ds

    def find(self, x: int) -> int:
        return self.gm.ds.find(x)

    def fingerprint(self) -> Fingerprint:
        return self.gm.ds.fingerprint()

    def query_reachable(self, a: int, b: int) -> bool:
        return self.find(a) == self.find(b)

    # -- updates -----------------------------------------------------------

    def insert_edge(self, u: int, label: Label | int, v: int) -> EdgeRef:
        edge = self.g.add_edge(u, label, v)
        if self.strategy == "rebuild":
            self.gm = opt_dyck(self.g)
        else:
            dst = self.find(edge.dst)
            self.gm.adjust_weight(self.find(edge.src), edge.kind, dst, +1)
            restore_fixpoint(self.gm, [(dst, edge.kind)])
        self._verify()
        return edge

    def delete_edge(self, u: int, label: Label | int, v: int) -> Deletion:
        edge = canonical(u, label, v)
        self.g.remove_edge(*edge)
        if self.strategy == "rebuild":
            self.gm = opt_dyck(self.g)
            self._verify()
            return Deletion(edge, "rebuild")

        r = self.find(edge.src)
        self.gm.adjust_weight(r, edge.kind, self.find(edge.dst), -1)
        if self.cycle_handling:
            region, sccs = backward_sccs(self.gm, r)
            cycles = _on_cycles(self.gm, sccs)
            if cycles:
                targets = region if self.split_scope == "region" else cycles
                split = self._split_and_resolve(targets)
                log.debug("deleted %s: %d cyclic classes, split %s", edge, len(cycles), split)
                self._verify()
                return Deletion(edge, "cycles", cycles, split)
        split = self.dynamic_deletion_acyclic(r)
        self._verify()
        return Deletion(edge, "acyclic", frozenset(), split)

    def _split_and_resolve(self, reps) -> list[int]:
        gm = self.gm
        split = sorted(r for r in reps if self.ds.size[r] > 1)
        seeds: set[Group] = set()
        for r in split:
            for m in gm.split_rep(r, self.g):
                seeds |= gm.groups_at(m)
        restore_fixpoint(gm, seeds)
        return split

    def dynamic_deletion_acyclic(self, r: int) -> list[int]:
        """Re-partition ``r`` and, on a split, its predecessors, by witnesses.

        Two members stay together when they are linked by a chain of shared
        (kind, target class) witnesses.  Returns the representatives that were
        split.  Only exact when nothing upstream of ``r`` lies on a cycle.
        """
        gm, find = self.gm, self.find
        queue = deque([r])
        split: list[int] = []
        touched: set[int] = set()
        while queue:
            rep = find(queue.popleft())
            if self.ds.size[rep] == 1:
                continue
            pieces = self._witness_components(rep)
            if len(pieces) == 1:
                continue
            split.append(rep)
            gm.split_rep(rep, self.g)
            new_reps = []
            for piece in pieces:
                acc = piece[0]
                for m in piece[1:]:
                    acc, _ = gm.merge_reps(acc, m)
                new_reps.append(acc)
            touched.update(new_reps)
            inside = set(new_reps)
            for p in new_reps:
                queue.extend(sorted(gm.predecessors(p) - inside))
        if touched:
            seeds: set[Group] = set()
            for x in touched:
                seeds |= gm.groups_at(find(x))
            restore_fixpoint(gm, seeds)
        return split

    def _witness_components(self, rep: int) -> list[list[int]]:
        members = sorted(self.ds.members(rep))
        local = DisjointSets(len(members))
        first: dict[tuple[int, int], int] = {}
        find = self.find
        for i, m in enumerate(members):
            for e in self.g.out_edges(m):
                key = (e.kind, find(e.dst))
                j = first.setdefault(key, i)
                if j != i:
                    local.union(i, j)
        return sorted(
            [sorted(members[i] for i in cls) for cls in local.classes()]
        )

    # -- checking ----------------------------------------------------------

    def invariant_errors(self) -> list[str]:
        errors = []
        mismatch = recount_mismatch(self.gm, self.g)
        if mismatch:
            errors.append(f"weight drift: {sorted(mismatch.items())}")
        bad = fixpoint_violations(self.gm)
        if bad:
            errors.append(f"not at fixpoint: groups {bad}")
        if self.gm.total_weight() != len(self.g):
            errors.append("total weight differs from edge count")
        return errors

    def _verify(self) -> None:
        if not self.check:
            return
        errors = self.invariant_errors()
        if errors:
            raise InvariantViolation("; ".join(errors))
