"""Brute-force ground truth for Dyck-reachability on bidirected graphs.

``cfl_closure`` derives the relation D straight from the grammar
``D -> eps | D D | (_i D )_i`` over the doubled edge set, without touching
the engine's merge rule.  It is cubic and meant for small graphs only.
"""

from __future__ import annotations

from collections import defaultdict, deque

from .graph import GraphError, InputGraph
from .partition import Fingerprint, fingerprint_of
from .static import opt_dyck

DEFAULT_BOUND = 64


class GraphTooLarge(GraphError, ValueError):
    pass


class OracleInconsistency(GraphError, AssertionError):
    """The derived relation is not an equivalence; the input is not bidirected."""


def reach_matrix(g: InputGraph, bound: int = DEFAULT_BOUND) -> list[list[bool]]:
    """``m[a][b]`` is true iff some path from a to b spells a Dyck word."""
    n = g.node_count
    if n > bound:
        raise GraphTooLarge(f"{n} nodes exceeds oracle bound {bound}")

    # Both polarities materialized: open a -(i-> b, close b -)i-> a.
    opens_into: list[defaultdict[int, list[int]]] = [defaultdict(list) for _ in range(n)]
    closes_from: list[defaultdict[int, list[int]]] = [defaultdict(list) for _ in range(n)]
    for a, kind, b in g.edges:
        opens_into[b][kind].append(a)  # a -(kind-> b
        closes_from[b][kind].append(a)  # b -)kind-> a

    rel = [[False] * n for _ in range(n)]
    fwd: list[set[int]] = [set() for _ in range(n)]  # x -> {y : D(x, y)}
    bwd: list[set[int]] = [set() for _ in range(n)]  # y -> {x : D(x, y)}
    work: deque[tuple[int, int]] = deque()

    def derive(x: int, y: int) -> None:
        if not rel[x][y]:
            rel[x][y] = True
            fwd[x].add(y)
            bwd[y].add(x)
            work.append((x, y))

    for x in range(n):
        derive(x, x)
    while work:
        x, y = work.popleft()
        # D -> D D, with (x, y) on either side
        for z in list(fwd[y]):
            derive(x, z)
        for w in list(bwd[x]):
            derive(w, y)
        # D -> (_i D )_i : p -(i-> x, D(x, y), y -)i-> q
        for kind, ps in opens_into[x].items():
            qs = closes_from[y].get(kind)
            if qs:
                for p in ps:
                    for q in qs:
                        derive(p, q)
    return rel


def check_equivalence(rel: list[list[bool]]) -> None:
    n = len(rel)
    for a in range(n):
        if not rel[a][a]:
            raise OracleInconsistency(f"D not reflexive at {a}")
        for b in range(n):
            if rel[a][b] != rel[b][a]:
                raise OracleInconsistency(f"D not symmetric at ({a}, {b})")
            if rel[a][b]:
                for c in range(n):
                    if rel[b][c] and not rel[a][c]:
                        raise OracleInconsistency(f"D not transitive at ({a}, {b}, {c})")


def cfl_closure(g: InputGraph, bound: int = DEFAULT_BOUND) -> Fingerprint:
    """Partition of the nodes of ``g`` into Dyck-reachability classes."""
    rel = reach_matrix(g, bound)
    check_equivalence(rel)
    return fingerprint_of(
        {frozenset(b for b, hit in enumerate(row) if hit) for row in rel}
    )


def rebuild_partition(g: InputGraph) -> Fingerprint:
    """Partition computed by a fresh fixpoint over ``g``."""
    return opt_dyck(g).ds.fingerprint()
