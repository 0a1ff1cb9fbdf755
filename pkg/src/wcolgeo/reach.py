"""Weak, strong and decreasing reachability with respect to a linear ordering."""

from __future__ import annotations

from collections import deque
from typing import Optional

from .graph import Graph, Ordering

KINDS = ("weak", "strong", "decr")


def _bfs_within(g: Graph, source: int, allowed, depth: int) -> dict[int, int]:
    """Distances from ``source`` up to ``depth``, stepping only onto ``allowed`` vertices."""
    dist = {source: 0}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        dx = dist[x]
        if dx == depth:
            continue
        for y in g.adjacency[x]:
            if y not in dist and allowed(y):
                dist[y] = dx + 1
                queue.append(y)
    return dist


def wreach(g: Graph, ordering: Ordering, k: int, v: int) -> set[int]:
    """Vertices weakly k-reachable from ``v`` (``v`` itself included).

    Each candidate ``u`` below ``v`` is tested by a search from ``v`` through
    vertices above ``u`` followed by a final hop onto ``u``.
    """
    pos = ordering.position
    result = {v}
    if k == 0:
        return result
    pv = pos[v]
    for u in ordering.sequence[:pv]:
        pu = pos[u]
        dist = _bfs_within(g, v, lambda x, pu=pu: pos[x] > pu, k - 1)
        if any(x in dist for x in g.adjacency[u]):
            result.add(u)
    return result


def sreach(g: Graph, ordering: Ordering, k: int, v: int) -> set[int]:
    """Vertices strongly k-reachable from ``v`` (``v`` itself included)."""
    pos = ordering.position
    pv = pos[v]
    result = {v}
    if k == 0:
        return result
    dist = _bfs_within(g, v, lambda x: pos[x] > pv, k - 1)
    for x in dist:
        for y in g.adjacency[x]:
            if pos[y] <= pv:
                result.add(y)
    return result


def decr(g: Graph, ordering: Ordering, k: int, v: int) -> set[int]:
    """Vertices reachable from ``v`` along decreasing paths of length at most k."""
    pos = ordering.position
    dist = {v: 0}
    queue = deque([v])
    while queue:
        x = queue.popleft()
        if dist[x] == k:
            continue
        for y in g.adjacency[x]:
            if pos[y] < pos[x] and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return set(dist)


def wreach_all(g: Graph, ordering: Ordering, k: int) -> list[set[int]]:
    """All weak reachability sets at once.

    For each ``u``, a search from ``u`` restricted to vertices above it finds
    exactly the vertices whose weak reach contains ``u``.
    """
    sets: list[set[int]] = [set() for _ in range(g.n)]
    pos = ordering.position
    for u in ordering.sequence:
        pu = pos[u]
        for x in _bfs_within(g, u, lambda y: pos[y] > pu, k):
            sets[x].add(u)
    return sets


def reach_sizes(g: Graph, ordering: Ordering, k: int, kind: str = "weak") -> list[int]:
    if kind == "weak":
        return [len(s) for s in wreach_all(g, ordering, k)]
    if kind == "strong":
        return [len(sreach(g, ordering, k, v)) for v in range(g.n)]
    if kind == "decr":
        return [len(decr(g, ordering, k, v)) for v in range(g.n)]
    raise ValueError(f"unknown kind {kind!r}; expected one of {KINDS}")


def colnum_ordered(g: Graph, ordering: Ordering, k: int, kind: str = "weak", at_least: Optional[int] = None) -> int:
    """Largest reach-set size under ``ordering``.

    With ``at_least`` set, the weak computation stops as soon as some vertex is
    known to reach that many vertices and returns the count reached so far;
    the result is then only a certificate for ``value >= at_least``.
    """
    if kind != "weak" or at_least is None:
        return max(reach_sizes(g, ordering, k, kind))
    pos = ordering.position
    counts = [0] * g.n
    best = 0
    for u in ordering.sequence:
        pu = pos[u]
        for x in _bfs_within(g, u, lambda y: pos[y] > pu, k):
            counts[x] += 1
            if counts[x] > best:
                best = counts[x]
                if best >= at_least:
                    return best
    return best


def vertex_separation(g: Graph, ordering: Ordering) -> int:
    """Max over x of the number of y before x that have a neighbour at or after x."""
    pos = ordering.position
    # vertex y stays "open" from its own position up to its last neighbour
    last = [max([pos[y]] + [pos[z] for z in g.adjacency[y]]) for y in range(g.n)]
    best = 0
    for x in range(g.n):
        px = pos[x]
        count = sum(1 for y in range(g.n) if pos[y] < px <= last[y])
        best = max(best, count)
    return best


def decreasing_tree_depth(g: Graph, ordering: Ordering) -> Optional[int]:
    """Smallest depth of a decreasing spanning tree, or None if there is none."""
    if g.n == 0:
        return 0
    # shortest decreasing paths from the maximum form a BFS tree in the
    # downward orientation, which is a decreasing spanning tree of least depth
    root = ordering.sequence[-1]
    pos = ordering.position
    dist = {root: 0}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if pos[y] < pos[x] and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    if len(dist) < g.n:
        return None
    return max(dist.values())


def verify_diameter_condition(g: Graph, ordering: Ordering, k: int) -> bool:
    """Every suffix of the ordering induces a connected subgraph of diameter at most k."""
    pos = ordering.position
    for v in ordering.sequence:
        pv = pos[v]
        members = ordering.sequence[pv:]
        for s in members:
            dist = _bfs_within(g, s, lambda y: pos[y] >= pv, k)
            if len(dist) < len(members):
                return False
    return True
