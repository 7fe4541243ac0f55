"""Union-find over node ids with explicit member lists."""

from __future__ import annotations

from typing import Iterator

from .graph import GraphError, NodeOutOfRange

Fingerprint = tuple[tuple[int, ...], ...]


class NotARepresentative(GraphError, LookupError):
    pass


class DisjointSets:
    """Disjoint sets with union by size, path compression and member lists.

    The surviving root of a union is the root of the larger class, ties going
    to the smaller id.  ``explode`` turns one class back into singletons; it is
    safe because parent links never cross class boundaries.
    """

    def __init__(self, n: int) -> None:
        self.parent = list(range(n))
        self.size = [1] * n
        self._members: dict[int, list[int]] = {i: [i] for i in range(n)}

    def __len__(self) -> int:
        return len(self.parent)

    def _check(self, x: int) -> None:
        if not 0 <= x < len(self.parent):
            raise NodeOutOfRange(f"node {x} not in 0..{len(self.parent) - 1}")

    def find(self, x: int) -> int:
        self._check(x)
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if self.size[ra] < self.size[rb] or (self.size[ra] == self.size[rb] and rb < ra):
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self._members[ra].extend(self._members.pop(rb))
        return ra

    def is_rep(self, r: int) -> bool:
        return 0 <= r < len(self.parent) and self.parent[r] == r

    def members(self, r: int) -> list[int]:
        if not self.is_rep(r):
            raise NotARepresentative(f"{r} is not a class representative")
        return self._members[r]

    def explode(self, r: int) -> list[int]:
        """Split the class of representative ``r`` into singletons."""
        members = self.members(r)
        del self._members[r]
        for m in members:
            self.parent[m] = m
            self.size[m] = 1
            self._members[m] = [m]
        return members

    def reps(self) -> Iterator[int]:
        return iter(self._members)

    def classes(self) -> list[list[int]]:
        return [list(ms) for ms in self._members.values()]

    def name(self, r: int) -> int:
        """Stable display name of a class: its smallest member."""
        return min(self.members(r))

    def fingerprint(self) -> Fingerprint:
        return fingerprint_of(self._members.values())


def fingerprint_of(classes) -> Fingerprint:
    """Canonical form of a partition: sorted tuple of sorted member tuples."""
    return tuple(sorted(tuple(sorted(c)) for c in classes))


def partition_fingerprint(ds: DisjointSets) -> Fingerprint:
    return ds.fingerprint()


def format_classes(fp: Fingerprint) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in fp)
