"""Radius-weighted distances and the property-P checker.

``lambda_r(u, v)`` is the cheapest total radius of the interior vertices of
a u-v path, i.e. a shortest path where vertices rather than edges carry the
weight and the two endpoints are free.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .geometry import Ball, Box, Representation, as_fraction, diam_sq
from .graph import Graph

INF = math.inf


class RadiusMap(tuple):
    """Per-vertex positive rational radii."""

    def __new__(cls, values: Iterable):
        vals = tuple(as_fraction(x) for x in values)
        if any(x <= 0 for x in vals):
            raise ValueError("radii must be positive")
        return super().__new__(cls, vals)


def _exact_sqrt(q: Fraction) -> Optional[Fraction]:
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def size_radius(rep: Representation) -> RadiusMap:
    """Radii proportional to the diameters of the objects.

    Exact diameters are used when they are all rational. Otherwise, for
    hypercubes (whose diameter is side times sqrt(d)) the side lengths are
    used; property P is invariant under rescaling r by a constant.
    """
    roots = [_exact_sqrt(diam_sq(o)) for o in rep.objects]
    if all(r is not None for r in roots):
        return RadiusMap(roots)
    if all(isinstance(o, Box) and o.is_hypercube() for o in rep.objects):
        return RadiusMap(o.sides[0] for o in rep.objects)
    if all(isinstance(o, Ball) for o in rep.objects):
        return RadiusMap(2 * o.radius for o in rep.objects)
    raise ValueError("diameters are irrational and not a common multiple of a rational size")


def lambda_from(g: Graph, r: Sequence[Fraction], v: int) -> list:
    """``lambda_r(u, v)`` for every u; entry ``v`` is 0 and unreachable vertices get ``inf``."""
    dist: list = [INF] * g.n
    dist[v] = Fraction(0)
    # leaving an interior vertex x charges r(x); leaving v itself is free
    heap = [(Fraction(0), v)]
    done = [False] * g.n
    while heap:
        d, x = heapq.heappop(heap)
        if done[x]:
            continue
        done[x] = True
        step = d if x == v else d + r[x]
        for y in g.adjacency[x]:
            if not done[y] and step < dist[y]:
                dist[y] = step
                heapq.heappush(heap, (step, y))
    return dist


def lambda_r(g: Graph, r: Sequence[Fraction], u: int, v: int):
    if u == v:
        raise ValueError("lambda_r(u, u) is not defined")
    return lambda_from(g, r, v)[u]


FTable = Union[Mapping[int, int], Sequence[int], Callable[[int], int]]


def table_value(f: FTable, p: int) -> int:
    try:
        value = f(p) if callable(f) else f[p]
    except (KeyError, IndexError):
        raise ValueError(f"f is not defined at {p}") from None
    return int(value)


@dataclass(frozen=True)
class PropertyPSpec:
    f: tuple[int, ...]
    a: int
    e: int

    @classmethod
    def from_function(cls, func: Callable[[int], int], p_max: int, a: int, e: int) -> "PropertyPSpec":
        return cls(tuple(int(func(p)) for p in range(p_max + 1)), a, e)

    @property
    def p_max(self) -> int:
        return len(self.f) - 1


@dataclass
class Violation:
    condition: str
    vertex: int
    s: int
    p: Optional[int]
    observed: int
    allowed: int
    witnesses: list[int] = field(default_factory=list)


@dataclass
class PropertyPReport:
    ok: bool
    violations: list[Violation]
    max_counts: dict[int, int]
    max_sequence: int
    s_coverage: str
    s_checked: int

    def summary(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.violations)} violations)"
        counts = ", ".join(f"p={p}:{c}" for p, c in sorted(self.max_counts.items()))
        return f"{status}; max counts [{counts}]; longest sequence {self.max_sequence}; s-coverage: {self.s_coverage}"


def _longest_sequence(radii: list[Fraction], a: int, base: Fraction) -> int:
    """Longest chain u_1, u_2, ... of distinct candidates with r(u_i) >= a^i * base."""
    radii = sorted(radii, reverse=True)
    best = 0
    for length in range(1, len(radii) + 1):
        # the largest radius takes the largest threshold
        if all(radii[j] >= a ** (length - j) * base for j in range(length)):
            best = length
        else:
            break
    return best


def check_property_P(
    g: Graph,
    r: Sequence,
    spec: PropertyPSpec,
    s_values: Optional[Iterable[int]] = None,
    max_witnesses: int = 10,
) -> PropertyPReport:
    """Check both conditions of P(f, a, e) for the pair ``(g, r)``.

    Without ``s_values`` the check is exact: for fixed v and p, vertex u is
    counted for exactly the integers s in an interval whose left end is
    ``max(1, ceil(lambda / (p r(v))))``, so the count is maximised at one of
    these left ends; condition (ii) is likewise maximised where its candidate
    set last grew. With ``s_values`` only those s are examined.
    """
    r = RadiusMap(r)
    n = g.n
    violations: list[Violation] = []
    max_counts = {p: 0 for p in range(spec.p_max + 1)}
    max_seq = 0
    checked = 0
    given = None if s_values is None else sorted({int(s) for s in s_values if int(s) >= 1})
    for v in range(n):
        lam = lambda_from(g, r, v)
        rv = r[v]
        finite = [u for u in range(n) if lam[u] != INF]
        for p in range(spec.p_max + 1):
            if given is not None:
                svals = given
            elif p == 0:
                svals = [1]
            else:
                svals = sorted({max(1, math.ceil(lam[u] / (p * rv))) for u in finite})
            for s in svals:
                checked += 1
                U = [u for u in finite if r[u] >= s * rv and lam[u] <= p * s * rv]
                max_counts[p] = max(max_counts[p], len(U))
                if len(U) > spec.f[p]:
                    violations.append(Violation("i", v, s, p, len(U), spec.f[p], U[:max_witnesses]))
        if given is not None:
            svals = given
        else:
            svals = sorted({max(1, math.ceil(lam[u] / rv)) for u in finite})
        for s in svals:
            checked += 1
            cand = [u for u in finite if lam[u] <= s * rv]
            length = _longest_sequence([r[u] for u in cand], spec.a, s * rv)
            max_seq = max(max_seq, length)
            if length > spec.e:
                big = sorted(cand, key=lambda u: r[u], reverse=True)[:length]
                violations.append(Violation("ii", v, s, None, length, spec.e, big[:max_witnesses]))
    coverage = "exact (all critical s)" if given is None else f"user-supplied s in {given}"
    return PropertyPReport(not violations, violations, max_counts, max_seq, coverage, checked)
