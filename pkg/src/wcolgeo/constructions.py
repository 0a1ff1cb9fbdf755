"""Generators for the lower-bound families and the scaffolding blow-up.

Rectangles built by :func:`gen_fprime` use axis 1 for the vertical direction
(all of length 1) and axis 2 for the horizontal one, which carries the sizes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .coloring import greedy_interval_coloring, monochromatic_edge
from .geometry import (
    Box,
    GeometryError,
    Representation,
    first_non_shrinking_pair,
    incomparable_pair,
    side_length,
)
from .graph import Graph, Ordering, intersection_graph, sizewise_order

GRAPH_VERTEX_BUDGET = 200_000
BOX_VERTEX_BUDGET = 10_000


class ConstructionBudgetError(ValueError):
    def __init__(self, what: str, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(f"{what} would have {size} vertices, over the budget of {budget}")


# --- F'_k: touching rectangles with a decreasing binary spanning tree -------------

# internal rectangles are (x_lo, x_hi, y_lo, y_hi); the smallest is [0,1]^2


def _fprime_rects(k: int, m: int) -> list[tuple[Fraction, ...]]:
    one = Fraction(1)
    s = (Fraction(0), one, Fraction(0), one)
    if k == 0:
        return [s]
    prev = _fprime_rects(k - 1, m)

    def place(scale: Fraction, corner_x: Fraction, corner_y: Fraction):
        # horizontal scaling, then the image of the corner (scale, 1) goes to the target
        dx, dy = corner_x - scale, corner_y - one
        return [(scale * a + dx, scale * b + dx, c + dy, d + dy) for a, b, c, d in prev]

    first = place(Fraction(m + 1), Fraction(1, 2), Fraction(0))
    placed = first + [s]
    longest = max(b - a for a, b, _, _ in placed)
    scale = Fraction(m + 1)
    while True:
        second = place(scale, Fraction(0), one)
        # the smallest rectangle of ``prev`` has width 1
        if scale > m * longest and not any(_rect_interiors_meet(p, q) for p in second for q in placed):
            break
        scale *= m + 1
    return second + placed


def _rect_interiors_meet(p, q) -> bool:
    return p[0] < q[1] and q[0] < p[1] and p[2] < q[3] and q[2] < p[3]


def gen_fprime(k: int, m: int) -> Representation:
    """Touching, comparable, m-shrinking rectangles whose graph has a decreasing
    spanning tree of depth k in the sizewise order; 2^(k+1) - 1 of them."""
    if k < 0 or m < 1:
        raise ValueError("need k >= 0 and m >= 1")
    rects = sorted(_fprime_rects(k, m), key=lambda r: r[1] - r[0], reverse=True)
    boxes = tuple(Box((c, a), (d, b)) for a, b, c, d in rects)
    return Representation(boxes, tuple(f"f{i}" for i in range(len(boxes))), declared_thinness=1)


# --- H'_{k,t}: t-thin intervals --------------------------------------------------


def _hprime_intervals(k: int, t: int, m: int, memo: dict) -> list[tuple[Fraction, Fraction]]:
    key = (k, t)
    if key in memo:
        return memo[key]
    if k == 0:
        out = [(Fraction(0), Fraction(1))]
    elif t == 1:
        out, left = [], Fraction(0)
        for i in range(k, -1, -1):
            length = Fraction(m + 1) ** i
            out.append((left, left + length))
            left += length
    else:
        A = _hprime_intervals(k, t - 1, m, memo)
        B = _hprime_intervals(k - 1, t, m, memo)
        a_left = min(lo for lo, _ in A)
        a_right = max(hi for _, hi in A)
        a_short = min(hi - lo for lo, hi in A)
        a_long = max(hi - lo for lo, hi in A)
        b_right = max(hi for _, hi in B)
        b_short = min(hi - lo for lo, hi in B)
        others = [hi for lo, hi in B if hi != b_right]
        # B's rightmost point lands half the smallest A-interval inside A
        target = a_right - a_short / 2
        scale = Fraction(1)
        while True:
            long_enough = scale * b_short > m * a_long
            # every other B-interval must end strictly left of A
            clear = not others or target - scale * (b_right - max(others)) < a_left
            if long_enough and clear:
                break
            scale *= m + 1
        shift = target - scale * b_right
        out = A + [(scale * lo + shift, scale * hi + shift) for lo, hi in B]
    memo[key] = out
    return out


def gen_hprime(k: int, t: int, m: int) -> Representation:
    """t-thin m-shrinking intervals, C(k+t, t) of them, whose graph has a decreasing
    spanning tree of depth k in the sizewise order."""
    if k < 0 or t < 1 or m < 1:
        raise ValueError("need k >= 0, t >= 1 and m >= 1")
    ivs = sorted(_hprime_intervals(k, t, m, {}), key=lambda iv: iv[1] - iv[0], reverse=True)
    lengths = [hi - lo for lo, hi in ivs]
    assert all(a > b for a, b in zip(lengths, lengths[1:])), "sizes must be distinct"
    boxes = tuple(Box((lo,), (hi,)) for lo, hi in ivs)
    return Representation(boxes, tuple(f"h{i}" for i in range(len(boxes))), declared_thinness=t)


# --- scaffolding ------------------------------------------------------------------


def scaffold_size(n: int, m: int) -> int:
    return n if m == 1 else (m**n - 1) // (m - 1)


@dataclass(frozen=True)
class ScaffoldResult:
    graph: Graph
    parent: tuple[int, ...]
    level: tuple[int, ...]
    word: tuple[tuple[int, ...], ...]
    base: tuple[int, ...]  # vertex of H copied by each tree node
    m: int

    def is_ancestor(self, y: int, x: int) -> bool:
        wy, wx = self.word[y], self.word[x]
        return len(wy) <= len(wx) and wx[: len(wy)] == wy

    def to_dict(self) -> dict:
        out = self.graph.to_dict()
        out.update(
            parent=list(self.parent),
            level=list(self.level),
            word=[list(w) for w in self.word],
            base=list(self.base),
            m=self.m,
        )
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ScaffoldResult":
        return cls(
            Graph.from_dict(data),
            tuple(data["parent"]),
            tuple(data["level"]),
            tuple(tuple(w) for w in data["word"]),
            tuple(data.get("base") or data["level"]),
            int(data.get("m", 0)),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _tree_layout(n: int, m: int):
    """Nodes of the complete m-ary tree of depth n-1 in level order."""
    offsets = [0]
    for i in range(n):
        offsets.append(offsets[-1] + m**i)
    parent, level, word = [], [], []
    for i in range(n):
        for j in range(m**i):
            level.append(i)
            parent.append(-1 if i == 0 else offsets[i - 1] + j // m)
            digits = []
            x = j
            for _ in range(i):
                x, r = divmod(x, m)
                digits.append(r)
            word.append(tuple(reversed(digits)))
    return offsets, parent, level, word


def scaffold_graph(H: Graph, ordering: Ordering, m: int, budget: int = GRAPH_VERTEX_BUDGET) -> ScaffoldResult:
    """Blow ``H`` up along the complete m-ary tree whose level i copies the i-th smallest vertex."""
    if m < 1:
        raise ValueError("m must be positive")
    n = H.n
    size = scaffold_size(n, m)
    if size > budget:
        raise ConstructionBudgetError("scaffold graph", size, budget)
    offsets, parent, level, word = _tree_layout(n, m)
    seq = ordering.sequence
    edges = []
    for j in range(1, n):
        below = [i for i in range(j) if H.has_edge(seq[i], seq[j])]
        for idx in range(m**j):
            node = offsets[j] + idx
            for i in below:
                edges.append((offsets[i] + idx // m ** (j - i), node))
    labels = []
    for lv, w in zip(level, word):
        labels.append(f"{H.labels[seq[lv]]}:{'.'.join(map(str, w))}")
    g = Graph.from_edges(size, edges, labels)
    base = tuple(seq[lv] for lv in level)
    return ScaffoldResult(g, tuple(parent), tuple(level), tuple(word), base, m)


def scaffold_boxes(rep: Representation, m: int, budget: int = BOX_VERTEX_BUDGET) -> Representation:
    """Boxes one dimension up whose intersection graph is the scaffolding of ``rep``."""
    if not rep.all_boxes():
        raise GeometryError("scaffold_boxes needs boxes")
    bad = incomparable_pair(rep)
    if bad is not None:
        raise GeometryError(f"boxes {rep.labels[bad[0]]} and {rep.labels[bad[1]]} are not comparable")
    order = sizewise_order(rep)
    seq = order.sequence
    sized = Representation(tuple(rep.objects[v] for v in seq), tuple(rep.labels[v] for v in seq))
    bad = first_non_shrinking_pair(sized, m)
    if bad is not None:
        raise GeometryError(
            f"sizewise sequence is not {m}-shrinking at {sized.labels[bad[0]]}, {sized.labels[bad[1]]}"
        )
    n, d = len(rep), rep.dimension
    size = scaffold_size(n, m)
    if size > budget:
        raise ConstructionBudgetError("scaffold box representation", size, budget)
    ell = [side_length(o, d) for o in sized.objects]
    if n > 1:
        eps = min(ell[i] / m - ell[i + 1] for i in range(n - 1)) / 2
    else:
        eps = Fraction(0)
    _, _, level, word = _tree_layout(n, m)
    boxes, labels = [], []
    for lv, w in zip(level, word):
        start = sum((w[i - 1] * (ell[i] + eps) for i in range(1, lv + 1)), Fraction(0))
        boxes.append(sized.objects[lv].product(start, start + ell[lv]))
        labels.append(f"{sized.labels[lv]}:{'.'.join(map(str, w))}")
    return Representation(tuple(boxes), tuple(labels), rep.declared_thinness)


# --- trading thinness for dimension ------------------------------------------------


def _require_hypercubes(rep: Representation) -> None:
    for label, o in zip(rep.labels, rep.objects):
        if not isinstance(o, Box) or not o.is_hypercube():
            raise GeometryError(f"object {label} is not a hypercube")


def lift_dimension(rep: Representation, Y: Iterable[int]) -> Representation:
    """Extend each hypercube by one axis, upward for indices in ``Y`` and downward otherwise."""
    _require_hypercubes(rep)
    up = set(Y)
    out = []
    for i, o in enumerate(rep.objects):
        side = o.sides[0]  # type: ignore[union-attr]
        out.append(o.product(0, side) if i in up else o.product(-side, 0))  # type: ignore[union-attr]
    return Representation(tuple(out), rep.labels, rep.declared_thinness)


def touching_lift(rep: Representation, coloring: Sequence[int], bits: Optional[int] = None) -> Representation:
    """Hypercubes ``bits`` dimensions up with the same intersection graph and disjoint interiors.

    ``coloring`` must be a proper colouring of the intersection graph by
    integers below ``2**bits``.
    """
    _require_hypercubes(rep)
    g = intersection_graph(rep)
    bad = monochromatic_edge(g, coloring)
    if bad is not None:
        raise GeometryError(f"colouring is not proper: {rep.labels[bad[0]]} and {rep.labels[bad[1]]} share colour")
    if bits is None:
        bits = max(1, max(coloring).bit_length())
    if any(c < 0 or c >= 2**bits for c in coloring):
        raise GeometryError(f"colours must lie in 0..{2**bits - 1}")
    out = rep
    for b in range(bits):
        out = lift_dimension(out, [i for i, c in enumerate(coloring) if not (c >> b) & 1])
    return Representation(out.objects, out.labels, 1)


# --- assembled lower-bound instances ---------------------------------------------


@dataclass
class LowerBoundInstance:
    kind: str
    k: int
    t: Optional[int]
    d: Optional[int]
    m: int
    prime: Representation
    prime_graph: Graph
    ordering: Ordering
    scaffold: ScaffoldResult
    boxes: Optional[Representation]
    expected: int
    radius: int
    coloring: Optional[list[int]] = None
    lifted: Optional[Representation] = None


def build_theorem_lb_instance(
    kind: str,
    k: int,
    t: Optional[int] = None,
    d: Optional[int] = None,
    graph_budget: int = GRAPH_VERTEX_BUDGET,
    box_budget: int = BOX_VERTEX_BUDGET,
) -> LowerBoundInstance:
    """Family F (touching boxes in R^3) or H (t-thin squares, optionally lifted to
    touching hypercubes in R^(d+2) with t = 2^d - 1) with weak radius-2k coloring
    number at least the returned ``expected``."""
    if k < 1:
        raise ValueError("k must be positive")
    if kind == "F":
        m = 2 ** (k + 1) - 1
        prime = gen_fprime(k, m)
        expected = m
    elif kind == "H":
        if d is not None:
            if t is not None and t != 2**d - 1:
                raise ValueError(f"with d={d} the thinness must be {2**d - 1}")
            t = 2**d - 1
        if t is None:
            raise ValueError("family H needs t (or d)")
        m = math.comb(k + t, t)
        prime = gen_hprime(k, t, m)
        expected = m
    else:
        raise ValueError(f"unknown family {kind!r}; expected 'F' or 'H'")
    H = intersection_graph(prime)
    order = sizewise_order(prime)
    scaffold = scaffold_graph(H, order, m, graph_budget)
    boxes = None
    if scaffold.graph.n <= box_budget:
        boxes = scaffold_boxes(prime, m, box_budget)
    inst = LowerBoundInstance(kind, k, t, d, m, prime, H, order, scaffold, boxes, expected, 2 * k)
    if kind == "H" and d is not None:
        colors = greedy_interval_coloring(prime)
        inst.coloring = [colors[v] for v in scaffold.base]
        if boxes is not None:
            inst.lifted = touching_lift(boxes, inst.coloring, bits=d)
    return inst
