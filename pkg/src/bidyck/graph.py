"""Bidirected labeled input graphs and their on-disk text format.

Only open-parenthesis edges are stored.  An edge ``u -(i-> v`` implies the
close edge ``v -)i-> u``; adding or removing either spelling touches the same
canonical entry.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple


class GraphError(Exception):
    """Base class for errors raised by the engine."""


class DuplicateEdge(GraphError, ValueError):
    pass


class MissingEdge(GraphError, LookupError):
    pass


class NodeOutOfRange(GraphError, IndexError):
    pass


class GraphSyntaxError(GraphError, ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class Polarity(enum.Enum):
    OPEN = "("
    CLOSE = ")"


@dataclass(frozen=True)
class Label:
    kind: int
    polarity: Polarity = Polarity.OPEN

    def __post_init__(self) -> None:
        if self.kind < 1:
            raise ValueError(f"parenthesis kind must be >= 1, got {self.kind}")

    @classmethod
    def open(cls, kind: int) -> Label:
        return cls(kind, Polarity.OPEN)

    @classmethod
    def close(cls, kind: int) -> Label:
        return cls(kind, Polarity.CLOSE)

    @classmethod
    def parse(cls, token: str) -> Label:
        """Accept ``"3"`` and ``"(3"`` as open labels, ``")3"`` as a close label."""
        if token and token[0] in "()":
            return cls(int(token[1:]), Polarity(token[0]))
        return cls(int(token))

    def __str__(self) -> str:
        return f"{self.polarity.value}{self.kind}"


class EdgeRef(NamedTuple):
    """Canonical open edge ``src -(kind-> dst``."""

    src: int
    kind: int
    dst: int


def canonical(u: int, label: Label | int, v: int) -> EdgeRef:
    if isinstance(label, int):
        label = Label.open(label)
    if label.polarity is Polarity.CLOSE:
        return EdgeRef(v, label.kind, u)
    return EdgeRef(u, label.kind, v)


class InputGraph:
    """Bidirected graph over dense node ids ``0..node_count-1``."""

    def __init__(
        self,
        node_count: int = 0,
        edges: Iterable[EdgeRef | tuple[int, int, int]] = (),
        *,
        labels: int | None = None,
        names: list[str] | None = None,
    ) -> None:
        if node_count < 0:
            raise ValueError("node_count must be non-negative")
        self.node_count = node_count
        self.declared_labels = labels
        self.names = list(names) if names else None
        self._edges: set[EdgeRef] = set()
        self._out: list[set[EdgeRef]] = [set() for _ in range(node_count)]
        self._in: list[set[EdgeRef]] = [set() for _ in range(node_count)]
        for src, kind, dst in edges:
            self.add_edge(src, kind, dst)

    # -- queries ---------------------------------------------------------

    @property
    def labels(self) -> int:
        """Alphabet size: the declared one, else the largest kind in use."""
        if self.declared_labels is not None:
            return self.declared_labels
        return max((e.kind for e in self._edges), default=0)

    def __len__(self) -> int:
        return len(self._edges)

    def __contains__(self, edge: object) -> bool:
        return edge in self._edges

    def __iter__(self) -> Iterator[EdgeRef]:
        return iter(sorted(self._edges))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InputGraph):
            return NotImplemented
        return self.node_count == other.node_count and self._edges == other._edges

    def __repr__(self) -> str:
        return f"InputGraph(node_count={self.node_count}, edges={sorted(self._edges)})"

    @property
    def edges(self) -> frozenset[EdgeRef]:
        return frozenset(self._edges)

    def has_edge(self, u: int, label: Label | int, v: int) -> bool:
        return canonical(u, label, v) in self._edges

    def out_edges(self, node: int) -> set[EdgeRef]:
        """Open edges leaving ``node`` (the node is their canonical source)."""
        return self._out[node]

    def in_edges(self, node: int) -> set[EdgeRef]:
        return self._in[node]

    def node_id(self, token: str) -> int:
        """Resolve a numeric id or a fixture name."""
        try:
            node = int(token)
        except ValueError:
            if self.names and token in self.names:
                return self.names.index(token)
            raise NodeOutOfRange(f"unknown node {token!r}") from None
        self._check_node(node)
        return node

    def copy(self) -> InputGraph:
        return InputGraph(
            self.node_count, self._edges, labels=self.declared_labels, names=self.names
        )

    # -- updates ---------------------------------------------------------

    def _check_node(self, node: int) -> None:
        if not 0 <= node < self.node_count:
            raise NodeOutOfRange(f"node {node} not in 0..{self.node_count - 1}")

    def add_edge(self, u: int, label: Label | int, v: int) -> EdgeRef:
        edge = canonical(u, label, v)
        self._check_node(edge.src)
        self._check_node(edge.dst)
        if self.declared_labels is not None and edge.kind > self.declared_labels:
            raise ValueError(
                f"label kind {edge.kind} exceeds alphabet size {self.declared_labels}"
            )
        if edge in self._edges:
            raise DuplicateEdge(f"edge {edge.src} -({edge.kind}-> {edge.dst} already present")
        self._edges.add(edge)
        self._out[edge.src].add(edge)
        self._in[edge.dst].add(edge)
        return edge

    def remove_edge(self, u: int, label: Label | int, v: int) -> EdgeRef:
        edge = canonical(u, label, v)
        self._check_node(edge.src)
        self._check_node(edge.dst)
        if edge not in self._edges:
            raise MissingEdge(f"edge {edge.src} -({edge.kind}-> {edge.dst} not present")
        self._edges.remove(edge)
        self._out[edge.src].remove(edge)
        self._in[edge.dst].remove(edge)
        return edge


def parse_graph(text: str | bytes) -> InputGraph:
    """Parse the line-oriented graph format.

    ``nodes <count>`` must be the first directive; ``labels <k>`` is optional;
    each ``edge <src> <kind> <dst>`` adds ``src -(kind-> dst``.  A comment of
    the form ``# names: a b c`` attaches fixture names to ids 0, 1, 2.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    graph: InputGraph | None = None
    names: list[str] | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("names:"):
                names = body[len("names:"):].split()
            continue
        if not line:
            continue
        head, *args = line.split()
        try:
            values = [int(a) for a in args]
        except ValueError:
            raise GraphSyntaxError(lineno, f"expected integers in {line!r}") from None
        if head == "nodes":
            if graph is not None:
                raise GraphSyntaxError(lineno, "repeated 'nodes' header")
            if len(values) != 1 or values[0] < 0:
                raise GraphSyntaxError(lineno, "expected 'nodes <count>'")
            graph = InputGraph(values[0])
            continue
        if graph is None:
            raise GraphSyntaxError(lineno, "missing 'nodes <count>' header")
        if head == "labels":
            if len(values) != 1 or values[0] < 0:
                raise GraphSyntaxError(lineno, "expected 'labels <k>'")
            if graph.declared_labels is not None or len(graph):
                raise GraphSyntaxError(lineno, "'labels' must precede edges and appear once")
            graph.declared_labels = values[0]
        elif head == "edge":
            if len(values) != 3:
                raise GraphSyntaxError(lineno, "expected 'edge <src> <kind> <dst>'")
            src, kind, dst = values
            if kind < 1:
                raise GraphSyntaxError(lineno, f"label kind must be >= 1, got {kind}")
            try:
                graph.add_edge(src, kind, dst)
            except NodeOutOfRange as exc:
                raise NodeOutOfRange(f"line {lineno}: {exc}") from None
            except DuplicateEdge as exc:
                raise DuplicateEdge(f"line {lineno}: {exc}") from None
            except ValueError as exc:
                raise GraphSyntaxError(lineno, str(exc)) from None
        else:
            raise GraphSyntaxError(lineno, f"unknown directive {head!r}")
    if graph is None:
        raise GraphSyntaxError(1, "missing 'nodes <count>' header")
    if names is not None:
        if len(names) != graph.node_count:
            raise GraphSyntaxError(1, "names comment must list one name per node")
        graph.names = names
    return graph


def serialize_graph(g: InputGraph) -> str:
    lines = []
    if g.names:
        lines.append("# names: " + " ".join(g.names))
    lines.append(f"nodes {g.node_count}")
    if g.declared_labels is not None:
        lines.append(f"labels {g.declared_labels}")
    lines.extend(f"edge {e.src} {e.kind} {e.dst}" for e in sorted(g.edges))
    return "\n".join(lines) + "\n"
