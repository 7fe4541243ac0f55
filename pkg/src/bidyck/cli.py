"""Command-line front end.

Set ``BIDYCK_LOG`` (e.g. ``debug``) to change log verbosity.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from .bench import FAMILIES, bench, format_csv, sizes_between
from .fuzz import fuzz_verify
from .graph import GraphError, parse_graph
from .partition import format_classes
from .session import SessionConfig, run_session
from .static import opt_dyck


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return value == "on"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidyck", description="Dynamic bidirected Dyck-reachability."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="solve a graph from scratch and dump classes and merged edges")
    p.add_argument("graph", type=Path)

    p = sub.add_parser("run", help="replay an update stream")
    p.add_argument("graph", type=Path)
    p.add_argument("--updates", type=Path)
    p.add_argument("--mode", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--strategy", choices=["dynamic", "rebuild"], default="dynamic")
    p.add_argument("--verify", choices=["none", "rebuild", "oracle"], default="none")

    p = sub.add_parser("fuzz", help="cross-check random update sequences")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--mode", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--emit", type=Path, help="write the first counterexample here")

    p = sub.add_parser("bench", help="time deletions over doubling sizes (CSV)")
    p.add_argument("--family", choices=sorted(FAMILIES), default="adversarial")
    p.add_argument("--min", type=int, default=64)
    p.add_argument("--max", type=int, default=1024)
    p.add_argument("--ops", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    level = os.environ.get("BIDYCK_LOG", "warning").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING))
    args = build_parser().parse_args(argv)

    if args.command == "build":
        try:
            gm = opt_dyck(parse_graph(args.graph.read_bytes()))
        except (OSError, GraphError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        sys.stdout.write(format_classes(gm.ds.fingerprint()) + gm.dump())
        return 0

    if args.command == "run":
        result = run_session(
            SessionConfig(args.graph, args.updates, args.mode, args.strategy, args.verify)
        )
        sys.stdout.write(result.output)
        for line in result.diagnostics:
            print(line, file=sys.stderr)
        return result.status

    if args.command == "fuzz":
        report = fuzz_verify(args.seed, args.trials, cycle_handling=args.mode)
        sys.stdout.write(report.format())
        if args.emit and report.first is not None:
            args.emit.mkdir(parents=True, exist_ok=True)
            (args.emit / "graph.txt").write_text(report.first.graph_text)
            (args.emit / "updates.txt").write_text(report.first.updates_text)
        return 1 if report.failures else 0

    rows = bench(args.family, sizes_between(args.min, args.max), ops=args.ops, seed=args.seed)
    sys.stdout.write(format_csv(rows))
    return 0


if __name__ == "__main__":
    sys.exit(main())
