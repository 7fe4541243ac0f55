"""Replay of update streams against an engine, with per-update verification."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from .dynamic import DyckEngine, Strategy
from .graph import GraphError, GraphSyntaxError, InputGraph, Label, parse_graph
from .oracle import DEFAULT_BOUND, cfl_closure, rebuild_partition
from .partition import Fingerprint, format_classes

Verify = Literal["none", "rebuild", "oracle"]


@dataclass(frozen=True)
class Update:
    op: str
    args: tuple
    lineno: int = 0

    def __str__(self) -> str:
        return " ".join([self.op, *map(str, self.args)])


def parse_updates(text: str, graph: InputGraph) -> list[Update]:
    """Parse ``add``/``del``/``query``/``classes``/``medges`` lines."""
    updates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        op, *args = line.split()
        try:
            if op in ("add", "del"):
                if len(args) != 3:
                    raise GraphSyntaxError(lineno, f"expected '{op} <u> <kind> <v>'")
                label = Label.parse(args[1])
                if label.polarity.value == ")":
                    # spelled as a close edge; stored canonically
                    u, v = graph.node_id(args[2]), graph.node_id(args[0])
                else:
                    u, v = graph.node_id(args[0]), graph.node_id(args[2])
                updates.append(Update(op, (u, label.kind, v), lineno))
            elif op == "query":
                if len(args) != 2:
                    raise GraphSyntaxError(lineno, "expected 'query <u> <v>'")
                updates.append(Update(op, tuple(graph.node_id(a) for a in args), lineno))
            elif op in ("classes", "medges"):
                if args:
                    raise GraphSyntaxError(lineno, f"'{op}' takes no arguments")
                updates.append(Update(op, (), lineno))
            else:
                raise GraphSyntaxError(lineno, f"unknown update {op!r}")
        except GraphSyntaxError:
            raise
        except (GraphError, ValueError) as exc:
            raise GraphSyntaxError(lineno, str(exc)) from None
    return updates


def format_updates(updates: list[Update]) -> str:
    return "".join(f"{u}\n" for u in updates)


def arbiter(verify: Verify):
    if verify == "rebuild":
        return rebuild_partition
    if verify == "oracle":
        return cfl_closure
    return None


@dataclass
class SessionResult:
    status: int
    output: str = ""
    diagnostics: list[str] = field(default_factory=list)
    divergence: tuple[int, Fingerprint, Fingerprint] | None = None


def replay(
    graph: InputGraph,
    updates: list[Update],
    *,
    cycle_handling: bool = True,
    strategy: Strategy = "dynamic",
    verify: Verify = "none",
    oracle_bound: int = DEFAULT_BOUND,
) -> SessionResult:
    """Apply ``updates`` in order; stop at the first error or divergence.

    Steps are numbered from 1 over ``add``/``del`` lines only.
    """
    if verify == "oracle" and graph.node_count > oracle_bound:
        return SessionResult(
            2, diagnostics=[f"verify=oracle needs at most {oracle_bound} nodes"]
        )
    judge = arbiter(verify)
    engine = DyckEngine(graph, cycle_handling=cycle_handling, strategy=strategy)
    out: list[str] = []
    step = 0
    for upd in updates:
        try:
            if upd.op == "add":
                engine.insert_edge(*upd.args)
            elif upd.op == "del":
                engine.delete_edge(*upd.args)
            elif upd.op == "query":
                out.append("true\n" if engine.query_reachable(*upd.args) else "false\n")
                continue
            elif upd.op == "classes":
                out.append(format_classes(engine.fingerprint()))
                continue
            else:
                out.append(engine.gm.dump())
                continue
        except GraphError as exc:
            return SessionResult(
                1, "".join(out), [f"line {upd.lineno}: {upd}: {exc}"]
            )
        step += 1
        if judge is not None:
            expected, actual = judge(engine.g), engine.fingerprint()
            if expected != actual:
                msg = (
                    f"divergence at step {step} (line {upd.lineno}: {upd}): "
                    f"expected {_fp(expected)} actual {_fp(actual)}"
                )
                return SessionResult(1, "".join(out), [msg], (step, expected, actual))
    return SessionResult(0, "".join(out))


def _fp(fp: Fingerprint) -> str:
    return "[" + " ".join("{" + ",".join(map(str, c)) + "}" for c in fp) + "]"


@dataclass
class SessionConfig:
    graph_path: Path
    updates_path: Path | None = None
    cycle_handling: bool = True
    strategy: Strategy = "dynamic"
    verify: Verify = "none"


def run_session(cfg: SessionConfig) -> SessionResult:
    try:
        graph = parse_graph(Path(cfg.graph_path).read_bytes())
        updates = []
        if cfg.updates_path is not None:
            updates = parse_updates(Path(cfg.updates_path).read_text(), graph)
    except (OSError, GraphError) as exc:
        return SessionResult(2, diagnostics=[str(exc)])
    return replay(
        graph,
        updates,
        cycle_handling=cfg.cycle_handling,
        strategy=cfg.strategy,
        verify=cfg.verify,
    )
