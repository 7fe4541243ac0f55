"""The weighted quotient graph over union-find classes.

Each merged edge ``(src, kind, dst)`` between representatives carries the
number of original open edges it folds.  Mutations keep that count exact;
:func:`quotient` recomputes it from scratch and doubles as the checker.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterator

from .graph import GraphError, InputGraph, MissingEdge
from .partition import DisjointSets, NotARepresentative

Triple = tuple[int, int, int]
Group = tuple[int, int]  # (dst rep, kind): the sources of one anchor


class SameRepresentative(GraphError, ValueError):
    pass


class MergedGraph:
    def __init__(self, ds: DisjointSets) -> None:
        self.ds = ds
        self.weights: dict[Triple, int] = {}
        self.out: defaultdict[int, set[tuple[int, int]]] = defaultdict(set)
        self.inc: defaultdict[int, defaultdict[int, set[int]]] = defaultdict(
            lambda: defaultdict(set)
        )

    # -- raw edge storage --------------------------------------------------

    def _add(self, src: int, kind: int, dst: int, weight: int) -> None:
        key = (src, kind, dst)
        if key in self.weights:
            self.weights[key] += weight
        else:
            self.weights[key] = weight
            self.out[src].add((kind, dst))
            self.inc[dst][kind].add(src)

    def _drop(self, src: int, kind: int, dst: int) -> int:
        weight = self.weights.pop((src, kind, dst))
        out = self.out[src]
        out.discard((kind, dst))
        if not out:
            del self.out[src]
        by_kind = self.inc[dst]
        by_kind[kind].discard(src)
        if not by_kind[kind]:
            del by_kind[kind]
            if not by_kind:
                del self.inc[dst]
        return weight

    def _detach(self, r: int) -> list[tuple[int, int, int, int]]:
        """Remove every merged edge incident to ``r``; return them with weights."""
        detached = []
        for kind, dst in list(self.out.get(r, ())):
            detached.append((r, kind, dst, self._drop(r, kind, dst)))
        for kind, srcs in list(self.inc.get(r, {}).items()):
            for src in list(srcs):
                detached.append((src, kind, r, self._drop(src, kind, r)))
        return detached

    def _require_rep(self, r: int) -> None:
        if not self.ds.is_rep(r):
            raise NotARepresentative(f"{r} is not a class representative")

    # -- queries -----------------------------------------------------------

    def weight(self, src: int, kind: int, dst: int) -> int:
        return self.weights.get((src, kind, dst), 0)

    def sources(self, dst: int, kind: int) -> set[int]:
        by_kind = self.inc.get(dst)
        if not by_kind:
            return set()
        return by_kind.get(kind, set())

    def predecessors(self, r: int) -> set[int]:
        return {s for srcs in self.inc.get(r, {}).values() for s in srcs}

    def successors(self, r: int) -> set[int]:
        return {d for _, d in self.out.get(r, ())}

    def has_self_loop(self, r: int) -> bool:
        return r in self.predecessors(r)

    def groups_at(self, r: int) -> set[Group]:
        """Every (dst, kind) group in which ``r`` is the anchor or a source."""
        groups = {(r, kind) for kind in self.inc.get(r, ())}
        groups.update((dst, kind) for kind, dst in self.out.get(r, ()))
        return groups

    def all_groups(self) -> Iterator[Group]:
        for dst, by_kind in self.inc.items():
            for kind in by_kind:
                yield dst, kind

    def total_weight(self) -> int:
        return sum(self.weights.values())

    def snapshot(self) -> dict[Triple, int]:
        """Weights keyed by class names (smallest member), independent of rep ids."""
        names = {r: min(ms) for r, ms in self.ds._members.items()}
        return {(names[s], k, names[d]): w for (s, k, d), w in self.weights.items()}

    def dump(self) -> str:
        return "".join(
            f"medge {s} {k} {d} {w}\n" for (s, k, d), w in sorted(self.snapshot().items())
        )

    # -- primitives --------------------------------------------------------

    def adjust_weight(self, src: int, kind: int, dst: int, delta: int) -> int:
        """Add ``delta`` (+1 or -1) to a merged edge; returns the new weight."""
        if delta not in (1, -1):
            raise ValueError("delta must be +1 or -1")
        self._require_rep(src)
        self._require_rep(dst)
        if delta == 1:
            self._add(src, kind, dst, 1)
            return self.weights[(src, kind, dst)]
        key = (src, kind, dst)
        if key not in self.weights:
            raise MissingEdge(f"merged edge {src} -({kind}-> {dst} not present")
        if self.weights[key] == 1:
            self._drop(src, kind, dst)
            return 0
        self.weights[key] -= 1
        return self.weights[key]

    def merge_reps(self, r1: int, r2: int) -> tuple[int, set[Group]]:
        """Union two classes and fold their edges.

        Returns the surviving representative and the groups whose source
        set changed, which are the only places a new merge can be forced.
        """
        self._require_rep(r1)
        self._require_rep(r2)
        if r1 == r2:
            raise SameRepresentative(f"{r1} merged with itself")
        winner = self.ds.union(r1, r2)
        loser = r2 if winner == r1 else r1
        changed: set[Group] = set()
        for src, kind, dst, weight in self._detach(loser):
            src = winner if src == loser else src
            dst = winner if dst == loser else dst
            self._add(src, kind, dst, weight)
            changed.add((dst, kind))
        return winner, changed

    def split_rep(self, r: int, g: InputGraph) -> list[int]:
        """Explode the class of ``r`` into singletons, recounting incident edges from ``g``."""
        self._require_rep(r)
        if self.ds.size[r] == 1:
            return [r]
        self._detach(r)
        members = self.ds.explode(r)
        inside = set(members)
        find = self.ds.find
        for m in members:
            for e in g.out_edges(m):
                self._add(m, e.kind, find(e.dst), 1)
            for e in g.in_edges(m):
                if e.src not in inside:
                    self._add(find(e.src), e.kind, m, 1)
        return members


def quotient(g: InputGraph, ds: DisjointSets) -> MergedGraph:
    gm = MergedGraph(ds)
    find = ds.find
    for e in g.edges:
        gm._add(find(e.src), e.kind, find(e.dst), 1)
    return gm


def recount_mismatch(gm: MergedGraph, g: InputGraph) -> dict[Triple, tuple[int, int]]:
    """Triples whose maintained weight differs from the recount, as (kept, recounted)."""
    kept = gm.snapshot()
    fresh = quotient(g, gm.ds).snapshot()
    return {
        t: (kept.get(t, 0), fresh.get(t, 0))
        for t in kept.keys() | fresh.keys()
        if kept.get(t, 0) != fresh.get(t, 0)
    }
