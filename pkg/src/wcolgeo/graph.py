"""Simple undirected graphs with a fixed vertex numbering, and linear orderings."""

from __future__ import annotations

import json
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .geometry import Box, Representation, diam_sq, intersects


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels: Optional[Sequence] = None) -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        if labels is None:
            labels = [str(i) for i in range(n)]
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError(f"{n} vertices but {len(labels)} labels")
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), labels)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adjacency[u]
        i = bisect_left(a, v)
        return i < len(a) and a[i] == v

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph and the list mapping new indices to old ones."""
        old = sorted(set(vertices))
        new_of = {v: i for i, v in enumerate(old)}
        edges = [(new_of[u], new_of[v]) for u in old for v in self.adjacency[u] if v in new_of and u < v]
        return Graph.from_edges(len(old), edges, [self.labels[v] for v in old]), old

    def to_dict(self) -> dict:
        return {"n": self.n, "labels": list(self.labels), "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        return cls.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]], data.get("labels"))

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, ordering: Optional["Ordering"] = None, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            attrs = f'label="{self.labels[v]}"'
            if ordering is not None:
                attrs = f'label="{self.labels[v]} ({ordering.position[v]})"'
            lines.append(f"  {v} [{attrs}];")
        for u, v in self.edges():
            lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Ordering:
    """A linear ordering: ``sequence`` lists vertices from smallest to largest."""

    sequence: tuple[int, ...]
    position: tuple[int, ...]

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "Ordering":
        seq = tuple(int(v) for v in seq)
        pos = [-1] * len(seq)
        for i, v in enumerate(seq):
            if not 0 <= v < len(seq) or pos[v] != -1:
                raise ValueError("ordering must be a permutation of 0..n-1")
            pos[v] = i
        return cls(seq, tuple(pos))

    @classmethod
    def from_positions(cls, position: Sequence[int]) -> "Ordering":
        seq = [-1] * len(position)
        for v, p in enumerate(position):
            if not 0 <= p < len(position) or seq[p] != -1:
                raise ValueError("positions must be a permutation of 0..n-1")
            seq[p] = v
        return cls(tuple(seq), tuple(int(p) for p in position))

    @classmethod
    def identity(cls, n: int) -> "Ordering":
        return cls(tuple(range(n)), tuple(range(n)))

    def __len__(self) -> int:
        return len(self.sequence)

    def precedes(self, u: int, v: int) -> bool:
        return self.position[u] < self.position[v]

    def to_labels(self, g: Graph) -> list[str]:
        return [g.labels[v] for v in self.sequence]

    @classmethod
    def from_labels(cls, g: Graph, names: Sequence[str]) -> "Ordering":
        index = {lab: i for i, lab in enumerate(g.labels)}
        try:
            return cls.from_sequence(index[str(x)] for x in names)
        except KeyError as exc:
            raise ValueError(f"unknown vertex label {exc.args[0]!r}") from None


def _extent(o, axis: int):
    if isinstance(o, Box):
        return o.lo[axis], o.hi[axis]
    return o.center[axis] - o.radius, o.center[axis] + o.radius


def intersection_graph(rep: Representation) -> Graph:
    """One vertex per object, an edge whenever two closed objects meet.

    Candidate pairs come from a sweep over the projections onto the last axis,
    so families that are spread out along that axis avoid the quadratic scan.
    """
    objs = rep.objects
    axis = rep.dimension - 1
    spans = [_extent(o, axis) for o in objs]
    order = sorted(range(len(objs)), key=lambda i: spans[i][0])
    active: list[int] = []
    edges = []
    for i in order:
        lo = spans[i][0]
        active = [j for j in active if spans[j][1] >= lo]
        for j in active:
            if intersects(objs[i], objs[j]):
                edges.append((i, j))
        active.append(i)
    return Graph.from_edges(len(objs), edges, rep.labels)


def sizewise_order(rep: Representation) -> Ordering:
    """Non-increasing diameter; equal sizes keep their input order."""
    sizes = [diam_sq(o) for o in rep.objects]
    return Ordering.from_sequence(sorted(range(len(sizes)), key=lambda i: (-sizes[i], i)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, [])
