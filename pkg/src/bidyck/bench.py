"""Deletion-time scaling measurements over generated instance families."""

from __future__ import annotations

import csv
import io
import math
import random
import statistics
import time
from dataclasses import dataclass

from .dynamic import DyckEngine, Strategy
from .graph import EdgeRef, InputGraph

COLUMNS = ["family", "n", "op_count", "total_ms", "per_op_us", "fit_exponent"]


def chain_family(n: int) -> InputGraph:
    """Pairs ``(a_i, b_i)`` stacked on an anchor, each level doubly witnessed.

    Node 0 is the anchor; level ``i`` is ``(2i+1, 2i+2)``.  Every level merges
    and the merged graph is a single acyclic chain.
    """
    levels = max(1, (n - 1) // 2)
    g = InputGraph(1 + 2 * levels)
    for i in range(levels):
        for side in (1, 2):
            node = 2 * i + side
            below = 0 if i == 0 else node - 2
            g.add_edge(node, 1, below)
            g.add_edge(node, 2, below)
    return g


def adversarial_family(n: int) -> InputGraph:
    """One class of ``n/2`` members with ``n/2`` outgoing merged edges of weight ``n/2``.

    Members ``0..m-1`` all point to every target ``m..2m-1``; target ``k``
    points back at member 0 with its own kind, so each target stays a
    singleton and closes a cycle through the big class.
    """
    m = max(1, n // 2)
    g = InputGraph(2 * m)
    for j in range(m):
        for k in range(m):
            g.add_edge(j, 1, m + k)
    for k in range(m):
        g.add_edge(m + k, k + 2, 0)
    return g


def random_family(n: int, seed: int = 0) -> InputGraph:
    rng = random.Random(f"bench:{seed}:{n}")
    g = InputGraph(n)
    target = 2 * n
    while len(g) < target:
        a, b = rng.randrange(n), rng.randrange(n)
        if not g.has_edge(a, k := rng.randint(1, 3), b):
            g.add_edge(a, k, b)
    return g


FAMILIES = {
    "chain": chain_family,
    "adversarial": adversarial_family,
    "random": random_family,
}


@dataclass
class BenchRow:
    family: str
    n: int
    op_count: int
    total_ms: float
    per_op_us: float
    fit_exponent: float | None = None


def time_deletions(g: InputGraph, edges: list[EdgeRef], strategy: Strategy) -> float:
    """Seconds spent in ``delete_edge``; each edge is re-inserted untimed."""
    engine = DyckEngine(g, strategy=strategy)
    total = 0.0
    for e in edges:
        start = time.perf_counter()
        engine.delete_edge(*e)
        total += time.perf_counter() - start
        engine.insert_edge(*e)
    return total


def fit_exponent(ns: list[int], per_op: list[float]) -> float | None:
    """Slope of log(time) against log(n); None with fewer than two sizes."""
    if len(ns) < 2:
        return None
    slope, _ = statistics.linear_regression(
        [math.log(n) for n in ns], [math.log(max(t, 1e-12)) for t in per_op]
    )
    return slope


def sizes_between(lo: int, hi: int) -> list[int]:
    sizes = []
    n = lo
    while n <= hi:
        sizes.append(n)
        n *= 2
    return sizes


def bench(
    family: str = "adversarial",
    sizes: list[int] | None = None,
    *,
    strategies: tuple[Strategy, ...] = ("dynamic", "rebuild"),
    ops: int = 8,
    seed: int = 0,
) -> list[BenchRow]:
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    sizes = sizes or sizes_between(64, 1024)
    rows: list[BenchRow] = []
    for strategy in strategies:
        series = []
        for n in sizes:
            g = FAMILIES[family](n)
            rng = random.Random(f"ops:{seed}:{family}:{n}")
            edges = sorted(g.edges)
            chosen = [rng.choice(edges) for _ in range(ops)] if edges else []
            seconds = time_deletions(g, chosen, strategy)
            count = len(chosen)
            series.append(
                BenchRow(
                    f"{family}/{strategy}",
                    n,
                    count,
                    seconds * 1e3,
                    seconds * 1e6 / count if count else 0.0,
                )
            )
        slope = fit_exponent([r.n for r in series], [r.per_op_us for r in series])
        for row in series:
            row.fit_exponent = slope
        rows.extend(series)
    return rows


def format_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(COLUMNS)
    for r in rows:
        writer.writerow(
            [
                r.family,
                r.n,
                r.op_count,
                f"{r.total_ms:.3f}",
                f"{r.per_op_us:.1f}",
                "" if r.fit_exponent is None else f"{r.fit_exponent:.3f}",
            ]
        )
    return buf.getvalue()
