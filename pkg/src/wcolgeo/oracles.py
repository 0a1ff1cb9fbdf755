"""Definition-level brute force, used to cross-check the fast routines on small graphs."""

from __future__ import annotations

from itertools import permutations

from .graph import Graph, Ordering


def simple_paths_from(g: Graph, v: int, k: int):
    """Every simple path starting at ``v`` with at most ``k`` edges, as a tuple of vertices."""
    stack = [(v,)]
    while stack:
        path = stack.pop()
        yield path
        if len(path) - 1 == k:
            continue
        for y in g.adjacency[path[-1]]:
            if y not in path:
                stack.append(path + (y,))


def naive_wreach(g: Graph, ordering: Ordering, k: int, v: int) -> set[int]:
    pos = ordering.position
    out = set()
    for path in simple_paths_from(g, v, k):
        u = path[-1]
        if pos[u] <= pos[v] and all(pos[x] > pos[u] for x in path[1:-1]):
            out.add(u)
    return out


def naive_sreach(g: Graph, ordering: Ordering, k: int, v: int) -> set[int]:
    pos = ordering.position
    out = set()
    for path in simple_paths_from(g, v, k):
        u = path[-1]
        if pos[u] <= pos[v] and all(pos[x] > pos[v] for x in path[1:-1]):
            out.add(u)
    return out


def naive_decr(g: Graph, ordering: Ordering, k: int, v: int) -> set[int]:
    pos = ordering.position
    out = set()
    for path in simple_paths_from(g, v, k):
        if all(pos[a] > pos[b] for a, b in zip(path, path[1:])):
            out.add(path[-1])
    return out


def naive_colnum(g: Graph, ordering: Ordering, k: int, kind: str = "weak") -> int:
    fn = {"weak": naive_wreach, "strong": naive_sreach, "decr": naive_decr}[kind]
    return max(len(fn(g, ordering, k, v)) for v in range(g.n))


def exhaustive_colnum(g: Graph, k: int, kind: str = "weak") -> int:
    """Minimum over all n! orderings; only for tiny graphs."""
    return min(naive_colnum(g, Ordering.from_sequence(p), k, kind) for p in permutations(range(g.n)))


def peeling_degeneracy(g: Graph) -> int:
    """Degeneracy as the largest minimum degree over all induced subgraphs, by repeated peeling."""
    alive = set(range(g.n))
    best = 0
    while alive:
        degs = {v: sum(1 for w in g.adjacency[v] if w in alive) for v in alive}
        low = min(degs.values())
        best = max(best, low)
        alive -= {v for v, d in degs.items() if d == low}
    return best


def naive_lambda(g: Graph, r, u: int, v: int):
    """Cheapest interior radius sum over all simple u-v paths, by enumeration."""
    best = None
    for path in simple_paths_from(g, u, g.n):
        if path[-1] == v:
            cost = sum(r[x] for x in path[1:-1])
            if best is None or cost < best:
                best = cost
    return best
