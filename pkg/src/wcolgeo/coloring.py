"""Greedy colouring of interval graphs."""

from __future__ import annotations

import heapq
from typing import Optional, Sequence

from .geometry import GeometryError, Representation
from .graph import Graph


def _intervals(rep: Representation):
    if rep.dimension != 1 or not rep.all_boxes():
        raise GeometryError("interval colouring needs a one-dimensional representation by boxes")
    return [(o.lo[0], o.hi[0]) for o in rep.objects]  # type: ignore[union-attr]


def greedy_interval_coloring(rep: Representation) -> list[int]:
    """Smallest-free-colour greedy in order of left endpoints.

    Intervals are closed, so two intervals sharing only an endpoint get
    different colours; the number of colours equals the clique number.
    """
    spans = _intervals(rep)
    colors = [0] * len(spans)
    busy: list[tuple] = []  # (right end, colour) of intervals still open
    free: list[int] = []
    used = 0
    for i in sorted(range(len(spans)), key=lambda i: (spans[i][0], i)):
        lo, hi = spans[i]
        while busy and busy[0][0] < lo:
            heapq.heappush(free, heapq.heappop(busy)[1])
        if free:
            c = heapq.heappop(free)
        else:
            c = used
            used += 1
        colors[i] = c
        heapq.heappush(busy, (hi, c))
    return colors


def interval_clique_number(rep: Representation) -> int:
    """Largest number of closed intervals sharing a point."""
    events = []
    for lo, hi in _intervals(rep):
        events.append((lo, 0))  # openings sort before closings at the same point
        events.append((hi, 1))
    best = cur = 0
    for _, kind in sorted(events):
        cur += 1 if kind == 0 else -1
        best = max(best, cur)
    return best


def monochromatic_edge(g: Graph, coloring: Sequence[int]) -> Optional[tuple[int, int]]:
    for u, v in g.edges():
        if coloring[u] == coloring[v]:
            return u, v
    return None


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return monochromatic_edge(g, coloring) is None


def greedy_coloring(g: Graph, sequence: Sequence[int]) -> list[int]:
    """First-fit colouring of the vertices in the given order."""
    colors = [-1] * g.n
    for v in sequence:
        taken = {colors[w] for w in g.adjacency[v]}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return colors
