"""Seeded random instances: graphs, orderings and t-thin geometric families.

All randomness goes through :class:`random.Random` (Mersenne Twister), whose
output for an integer or string seed is the same on every platform.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .geometry import Ball, Box, GeoObject, Representation, interiors_overlap
from .graph import Graph, Ordering
from .reach import vertex_separation


def sample_rng(seed: int, *tags) -> random.Random:
    """Independent stream per (seed, tags), so results do not depend on how samples are scheduled."""
    return random.Random(":".join(str(x) for x in (seed,) + tags))


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if rng.random() < p])


def random_ordering(n: int, rng: random.Random) -> Ordering:
    seq = list(range(n))
    rng.shuffle(seq)
    return Ordering.from_sequence(seq)


def all_graphs(n: int):
    """Every labelled graph on ``n`` vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def random_w_bounded(n: int, w: int, rng: random.Random, density: float = 0.6) -> tuple[Graph, Ordering]:
    """A random graph with vertex separation at most ``w`` under the identity ordering.

    Edges are offered in random order and kept while the bound still holds.
    """
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    order = Ordering.identity(n)
    edges: list[tuple[int, int]] = []
    for e in pairs:
        if rng.random() > density:
            continue
        trial = Graph.from_edges(n, edges + [e])
        if vertex_separation(trial, order) <= w:
            edges.append(e)
    # hide the structure behind a random relabelling
    perm = list(range(n))
    rng.shuffle(perm)
    g = Graph.from_edges(n, [(perm[a], perm[b]) for a, b in edges])
    return g, Ordering.from_sequence(perm)


def _place_layers(propose, count: int, t: int, rng: random.Random, attempts: int) -> list[GeoObject]:
    """Split ``count`` objects over ``t`` layers, each layer pairwise interior-disjoint.

    A union of t interior-disjoint layers is t-thin.
    """
    layers: list[list[GeoObject]] = [[] for _ in range(t)]
    placed = 0
    for _ in range(attempts):
        if placed == count:
            break
        layer = layers[placed % t]
        obj = propose()
        if not any(interiors_overlap(obj, other) for other in layer):
            layer.append(obj)
            placed += 1
    return [o for layer in layers for o in layer]


def _grid_value(rng: random.Random, extent: int, step: Fraction) -> Fraction:
    return step * rng.randrange(int(extent / step) + 1)


def random_thin_cubes(
    count: int,
    t: int,
    d: int,
    rng: random.Random,
    sides: Sequence = (1,),
    extent: int = 0,
    attempts: int = 4000,
) -> Representation:
    """Up to ``count`` hypercubes on a half-integer grid, t-thin by construction.

    The coarse grid makes exact touching common.
    """
    sides = [Fraction(s) for s in sides]
    extent = extent or max(3, int((count / t) ** (1 / d)) + 2) * int(max(sides))
    step = Fraction(1, 2)

    def propose():
        side = rng.choice(sides)
        lo = [_grid_value(rng, extent, step) for _ in range(d)]
        return Box(lo, [x + side for x in lo])

    objs = _place_layers(propose, count, t, rng, attempts)
    return Representation(tuple(objs), declared_thinness=t)


def random_thin_balls(
    count: int,
    t: int,
    d: int,
    rng: random.Random,
    radii: Sequence = (Fraction(1, 2), 1, Fraction(3, 2), 2),
    extent: int = 0,
    attempts: int = 4000,
) -> Representation:
    """Up to ``count`` balls with integer centres, t-thin by construction."""
    radii = [Fraction(r) for r in radii]
    extent = extent or max(4, int(2 * (count / t) ** (1 / d)) + 2)

    def propose():
        return Ball([rng.randrange(extent + 1) for _ in range(d)], rng.choice(radii))

    objs = _place_layers(propose, count, t, rng, attempts)
    return Representation(tuple(objs), declared_thinness=t)


def random_thin_comparable_boxes(
    count: int, t: int, d: int, rng: random.Random, shapes: int = 4, attempts: int = 4000
) -> Representation:
    """Boxes whose side vectors form a chain under coordinatewise dominance, hence comparable."""
    chain = [[Fraction(1, 2)] * d]
    for _ in range(shapes - 1):
        nxt = list(chain[-1])
        nxt[rng.randrange(d)] += Fraction(1, 2)
        chain.append(nxt)
    extent = max(4, int((count / t) ** (1 / d)) * 3)
    step = Fraction(1, 2)

    def propose():
        sides = rng.choice(chain)
        lo = [_grid_value(rng, extent, step) for _ in range(d)]
        return Box(lo, [x + s for x, s in zip(lo, sides)])

    objs = _place_layers(propose, count, t, rng, attempts)
    return Representation(tuple(objs), declared_thinness=t)
