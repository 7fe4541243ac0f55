"""Randomized cross-checking of the engine against both arbiters."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .dynamic import DyckEngine
from .graph import EdgeRef, GraphError, InputGraph, serialize_graph
from .oracle import cfl_closure, rebuild_partition
from .session import Update, format_updates


def random_graph(rng: random.Random, max_nodes: int = 10, max_kinds: int = 3) -> InputGraph:
    """Draw ``n`` nodes, ``k`` kinds, and uniform(0, 2n) distinct open edges."""
    n = rng.randint(1, max_nodes)
    k = rng.randint(1, max_kinds)
    triples = all_triples(n, k)
    m = min(rng.randint(0, 2 * n), len(triples))
    return InputGraph(n, rng.sample(triples, m), labels=k)


def all_triples(n: int, k: int) -> list[EdgeRef]:
    return [EdgeRef(a, i, b) for a in range(n) for i in range(1, k + 1) for b in range(n)]


def random_updates(rng: random.Random, g: InputGraph, max_ops: int = 20) -> list[Update]:
    """Insertions of absent edges and deletions of present ones, tracked in order."""
    present = set(g.edges)
    absent = sorted(set(all_triples(g.node_count, g.labels or 1)) - present)
    updates = []
    for _ in range(rng.randint(1, max_ops)):
        if present and (not absent or rng.random() < 0.5):
            edge = rng.choice(sorted(present))
            present.remove(edge)
            absent.append(edge)
            absent.sort()
            updates.append(Update("del", tuple(edge)))
        elif absent:
            edge = absent.pop(rng.randrange(len(absent)))
            present.add(edge)
            updates.append(Update("add", tuple(edge)))
    return updates


@dataclass
class Counterexample:
    trial: int
    step: int
    message: str
    graph_text: str
    updates_text: str


@dataclass
class FuzzReport:
    trials: int = 0
    failures: int = 0
    operations: int = 0
    first: Counterexample | None = None
    failed_trials: list[int] = field(default_factory=list)

    def format(self) -> str:
        lines = [f"trials {self.trials}", f"operations {self.operations}", f"failures {self.failures}"]
        if self.first is not None:
            c = self.first
            lines += [
                f"counterexample trial {c.trial} step {c.step}: {c.message}",
                "--- graph",
                c.graph_text.rstrip("\n"),
                "--- updates",
                c.updates_text.rstrip("\n"),
            ]
        return "\n".join(lines) + "\n"


def check_trial(
    g: InputGraph, updates: list[Update], *, cycle_handling: bool = True
) -> tuple[int, str] | None:
    """Run one trial; return (step, message) of the first failure, if any."""
    engine = DyckEngine(g, cycle_handling=cycle_handling, check=True)
    for step, upd in enumerate(updates, start=1):
        try:
            if upd.op == "add":
                engine.insert_edge(*upd.args)
            else:
                engine.delete_edge(*upd.args)
        except GraphError as exc:
            return step, f"{upd}: {exc}"
        actual = engine.fingerprint()
        for name, judge in (("oracle", cfl_closure), ("rebuild", rebuild_partition)):
            expected = judge(engine.g)
            if expected != actual:
                return step, f"{upd}: {name} expected {expected} actual {actual}"
    return None


def fuzz_verify(
    seed: int = 1,
    trials: int = 1000,
    *,
    cycle_handling: bool = True,
    max_nodes: int = 10,
    max_kinds: int = 3,
    max_ops: int = 20,
) -> FuzzReport:
    report = FuzzReport()
    for trial in range(trials):
        rng = random.Random(f"{seed}:{trial}")
        g = random_graph(rng, max_nodes, max_kinds)
        updates = random_updates(rng, g, max_ops)
        report.trials += 1
        report.operations += len(updates)
        failure = check_trial(g, updates, cycle_handling=cycle_handling)
        if failure is None:
            continue
        report.failures += 1
        report.failed_trials.append(trial)
        if report.first is None:
            step, message = failure
            report.first = Counterexample(
                trial, step, message, serialize_graph(g), format_updates(updates[:step])
            )
    return report
