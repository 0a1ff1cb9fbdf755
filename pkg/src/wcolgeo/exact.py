"""Exact weak and strong coloring numbers by branch and bound over orderings.

Orderings are built from the smallest position upward. Once a vertex is
placed, its reach set is final: every vertex placed later is larger, so the
vertices it could still reach are exactly the ones already placed, and the
only vertices allowed in the interior of a path are the unplaced ones.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .graph import Graph, Ordering
from .reach import colnum_ordered

DEFAULT_NODE_BUDGET = 2_000_000


class BudgetExhausted(RuntimeError):
    """Raised when the search runs out of nodes; the answer lies in [lower, upper]."""

    def __init__(self, lower: int, upper: int, ordering: Ordering, nodes: int):
        self.lower = lower
        self.upper = upper
        self.ordering = ordering
        self.nodes = nodes
        super().__init__(f"unknown after {nodes} nodes: value lies in [{lower}, {upper}]")


@dataclass(frozen=True)
class ExactResult:
    value: int
    ordering: Ordering
    nodes: int


def degeneracy_ordering(g: Graph) -> tuple[int, Ordering]:
    """Degeneracy and an ordering in which each vertex has at most that many smaller neighbours."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    removal = []
    degeneracy = 0
    for _ in range(g.n):
        v = min((u for u in range(g.n) if not removed[u]), key=lambda u: (deg[u], u))
        degeneracy = max(degeneracy, deg[v])
        removed[v] = True
        removal.append(v)
        for w in g.adjacency[v]:
            if not removed[w]:
                deg[w] -= 1
    return degeneracy, Ordering.from_sequence(reversed(removal))


def coloring_number(g: Graph) -> int:
    return degeneracy_ordering(g)[0] + 1 if g.n else 0


def _ball(g: Graph, source: int, free: list[bool], depth: int) -> list[int]:
    """Vertices within ``depth`` of ``source`` using only ``free`` vertices (source included)."""
    seen = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if seen[x] == depth:
            continue
        for y in g.adjacency[x]:
            if free[y] and y not in seen:
                seen[y] = seen[x] + 1
                queue.append(y)
    return list(seen)


class _Search:
    def __init__(self, g: Graph, k: int, kind: str, budget: int, upper: int, upper_order: Ordering, lower: int):
        self.g = g
        self.k = k
        self.kind = kind
        self.budget = budget
        self.best = upper
        self.best_seq = list(upper_order.sequence)
        self.lower = lower
        self.nodes = 0
        self.free = [True] * g.n
        self.count = [0] * g.n  # weak: reach hits so far; strong: placed neighbours
        self.final = [0] * g.n
        self.seq: list[int] = []

    def _place(self, u: int) -> list[int]:
        g, free = self.g, self.free
        if self.kind == "weak":
            touched = _ball(g, u, free, self.k)
            for x in touched:
                self.count[x] += 1
            self.final[u] = self.count[u]
        else:
            inner = _ball(g, u, free, self.k - 1)
            reach = {u}
            for x in inner:
                for y in g.adjacency[x]:
                    if not free[y]:
                        reach.add(y)
            self.final[u] = len(reach)
            touched = [y for y in g.adjacency[u] if free[y]]
            for y in touched:
                self.count[y] += 1
        free[u] = False
        self.seq.append(u)
        return touched

    def _unplace(self, u: int, touched: list[int]) -> None:
        self.seq.pop()
        self.free[u] = True
        for x in touched:
            self.count[x] -= 1

    def _bound(self, current: int) -> int:
        b = current
        for x in range(self.g.n):
            if self.free[x] and self.count[x] + 1 > b:
                b = self.count[x] + 1
        return b

    def run(self, current: int = 0) -> None:
        if self.best <= self.lower:
            return
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExhausted(self.lower, self.best, Ordering.from_sequence(self.best_seq), self.nodes)
        if len(self.seq) == self.g.n:
            if current < self.best:
                self.best = current
                self.best_seq = list(self.seq)
            return
        children = []
        for u in range(self.g.n):
            if not self.free[u]:
                continue
            touched = self._place(u)
            value = max(current, self.final[u])
            bound = self._bound(value)
            self._unplace(u, touched)
            if bound < self.best:
                children.append((bound, u))
        children.sort()
        for bound, u in children:
            if bound >= self.best:
                continue
            touched = self._place(u)
            self.run(max(current, self.final[u]))
            self._unplace(u, touched)


def _exact(g: Graph, k: int, kind: str, budget: int, upper_hint: Optional[Ordering]) -> ExactResult:
    if g.n == 0:
        return ExactResult(0, Ordering.identity(0), 0)
    if k == 0:
        return ExactResult(1, Ordering.identity(g.n), 0)
    _, degen = degeneracy_ordering(g)
    candidates = [degen, Ordering.identity(g.n)]
    if upper_hint is not None:
        candidates.append(upper_hint)
    scored = [(colnum_ordered(g, o, k, kind), i) for i, o in enumerate(candidates)]
    upper, idx = min(scored)
    lower = coloring_number(g)
    search = _Search(g, k, kind, budget, upper, candidates[idx], lower)
    search.run()
    return ExactResult(search.best, Ordering.from_sequence(search.best_seq), search.nodes)


def wcol_exact(g: Graph, k: int, budget: int = DEFAULT_NODE_BUDGET, hint: Optional[Ordering] = None) -> ExactResult:
    """Minimum over all orderings of the largest weak k-reach set."""
    return _exact(g, k, "weak", budget, hint)


def scol_exact(g: Graph, k: int, budget: int = DEFAULT_NODE_BUDGET, hint: Optional[Ordering] = None) -> ExactResult:
    """Minimum over all orderings of the largest strong k-reach set."""
    return _exact(g, k, "strong", budget, hint)
