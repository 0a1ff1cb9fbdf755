"""Exact predicates on axis-aligned boxes and balls with rational coordinates.

Every coordinate is stored as a :class:`fractions.Fraction`, so touching and
overlapping are decided without tolerances. Ball predicates only ever compare
squared distances.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

Number = Union[int, str, Fraction]

DEFAULT_CELL_BUDGET = 10**8


class GeometryError(ValueError):
    pass


class BudgetExceeded(GeometryError):
    pass


def as_fraction(x: Number) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def _vec(xs: Iterable[Number]) -> tuple[Fraction, ...]:
    return tuple(as_fraction(x) for x in xs)


@dataclass(frozen=True)
class Box:
    lo: tuple[Fraction, ...]
    hi: tuple[Fraction, ...]

    def __init__(self, lo: Iterable[Number], hi: Iterable[Number]):
        lo, hi = _vec(lo), _vec(hi)
        if len(lo) != len(hi) or not lo:
            raise GeometryError(f"box corners must have equal positive dimension, got {len(lo)} and {len(hi)}")
        for i, (a, b) in enumerate(zip(lo, hi)):
            if not a < b:
                raise GeometryError(f"box is degenerate on axis {i + 1}: [{a}, {b}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @property
    def dimension(self) -> int:
        return len(self.lo)

    @property
    def sides(self) -> tuple[Fraction, ...]:
        return tuple(b - a for a, b in zip(self.lo, self.hi))

    @property
    def center(self) -> tuple[Fraction, ...]:
        return tuple((a + b) / 2 for a, b in zip(self.lo, self.hi))

    def is_hypercube(self) -> bool:
        return len(set(self.sides)) == 1

    def product(self, lo: Number, hi: Number) -> "Box":
        """The box in one dimension higher, extended by ``[lo, hi]`` on a new last axis."""
        return Box(self.lo + (as_fraction(lo),), self.hi + (as_fraction(hi),))


@dataclass(frozen=True)
class Ball:
    center: tuple[Fraction, ...]
    radius: Fraction

    def __init__(self, center: Iterable[Number], radius: Number):
        center, radius = _vec(center), as_fraction(radius)
        if not center:
            raise GeometryError("ball center must have positive dimension")
        if radius <= 0:
            raise GeometryError(f"ball radius must be positive, got {radius}")
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)

    @property
    def dimension(self) -> int:
        return len(self.center)


GeoObject = Union[Box, Ball]


def _check_dims(a: GeoObject, b: GeoObject) -> None:
    if a.dimension != b.dimension:
        raise GeometryError(f"dimension mismatch: {a.dimension} vs {b.dimension}")


def _clamp_dist_sq(box: Box, p: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for lo, hi, x in zip(box.lo, box.hi, p):
        if x < lo:
            total += (lo - x) ** 2
        elif x > hi:
            total += (x - hi) ** 2
    return total


def _dist_sq(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return sum(((a - b) ** 2 for a, b in zip(p, q)), Fraction(0))


def intersects(a: GeoObject, b: GeoObject) -> bool:
    """True iff the closed objects share a point."""
    _check_dims(a, b)
    if isinstance(a, Box) and isinstance(b, Box):
        return all(alo <= bhi and blo <= ahi for alo, ahi, blo, bhi in zip(a.lo, a.hi, b.lo, b.hi))
    if isinstance(a, Ball) and isinstance(b, Ball):
        return _dist_sq(a.center, b.center) <= (a.radius + b.radius) ** 2
    box, ball = (a, b) if isinstance(a, Box) else (b, a)
    return _clamp_dist_sq(box, ball.center) <= ball.radius**2


def _box_ball_interiors_overlap(box: Box, ball: Ball) -> bool:
    # Open ball meets open box iff the closest point of the closed box lies strictly
    # inside the ball; the closest point can be approached from the box interior.
    return _clamp_dist_sq(box, ball.center) < ball.radius**2


def interiors_overlap(a: GeoObject, b: GeoObject) -> bool:
    """True iff the open interiors of the two objects meet."""
    _check_dims(a, b)
    if isinstance(a, Box) and isinstance(b, Box):
        return all(alo < bhi and blo < ahi for alo, ahi, blo, bhi in zip(a.lo, a.hi, b.lo, b.hi))
    if isinstance(a, Ball) and isinstance(b, Ball):
        return _dist_sq(a.center, b.center) < (a.radius + b.radius) ** 2
    box, ball = (a, b) if isinstance(a, Box) else (b, a)
    return _box_ball_interiors_overlap(box, ball)


def diam_sq(o: GeoObject) -> Fraction:
    if isinstance(o, Box):
        return sum((s * s for s in o.sides), Fraction(0))
    return (2 * o.radius) ** 2


def side_length(o: GeoObject, axis: int) -> Fraction:
    """Length of a box along ``axis``, counted from 1 as in ``l_1, ..., l_d``."""
    if not isinstance(o, Box):
        raise GeometryError("side_length is only defined for boxes")
    if not 1 <= axis <= o.dimension:
        raise GeometryError(f"axis {axis} out of range 1..{o.dimension}")
    return o.hi[axis - 1] - o.lo[axis - 1]


def inflate(o: GeoObject, m: int) -> GeoObject:
    """Scale ``o`` by ``2m+1`` about its center."""
    if m < 0:
        raise GeometryError("m must be nonnegative")
    f = 2 * m + 1
    if isinstance(o, Ball):
        return Ball(o.center, o.radius * f)
    c = o.center
    return Box([p + f * (q - p) for p, q in zip(c, o.lo)], [p + f * (q - p) for p, q in zip(c, o.hi)])


def contains(outer: GeoObject, inner: GeoObject) -> bool:
    """Closed containment, exact for box/box and ball/ball."""
    _check_dims(outer, inner)
    if isinstance(outer, Box) and isinstance(inner, Box):
        return all(a <= c and d <= b for a, b, c, d in zip(outer.lo, outer.hi, inner.lo, inner.hi))
    if isinstance(outer, Ball) and isinstance(inner, Ball):
        gap = outer.radius - inner.radius
        return gap >= 0 and _dist_sq(outer.center, inner.center) <= gap * gap
    raise GeometryError("containment is implemented for same-type objects only")


@dataclass(frozen=True)
class Representation:
    """An ordered family of objects in a common dimension, one per vertex."""

    objects: tuple[GeoObject, ...]
    labels: tuple[str, ...] = ()
    declared_thinness: Optional[int] = None

    def __post_init__(self):
        objects = tuple(self.objects)
        labels = tuple(str(x) for x in self.labels) if self.labels else tuple(str(i) for i in range(len(objects)))
        object.__setattr__(self, "objects", objects)
        object.__setattr__(self, "labels", labels)
        if not objects:
            raise GeometryError("a representation needs at least one object")
        if len(labels) != len(objects):
            raise GeometryError(f"{len(objects)} objects but {len(labels)} labels")
        if len(set(labels)) != len(labels):
            raise GeometryError("labels must be distinct")
        dims = {o.dimension for o in objects}
        if len(dims) != 1:
            raise GeometryError(f"objects of mixed dimensions {sorted(dims)}")
        if self.declared_thinness is not None and self.declared_thinness < 1:
            raise GeometryError("declared thinness must be a positive integer")

    def __len__(self) -> int:
        return len(self.objects)

    def __iter__(self):
        return iter(self.objects)

    def __getitem__(self, i):
        return self.objects[i]

    @property
    def dimension(self) -> int:
        return self.objects[0].dimension

    def all_boxes(self) -> bool:
        return all(isinstance(o, Box) for o in self.objects)

    def to_dict(self) -> dict:
        objs = []
        for o in self.objects:
            if isinstance(o, Box):
                objs.append({"type": "box", "lo": [str(x) for x in o.lo], "hi": [str(x) for x in o.hi]})
            else:
                objs.append({"type": "ball", "center": [str(x) for x in o.center], "radius": str(o.radius)})
        out = {"dimension": self.dimension, "objects": objs, "labels": list(self.labels)}
        if self.declared_thinness is not None:
            out["thinness"] = self.declared_thinness
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "Representation":
        objs: list[GeoObject] = []
        for item in data["objects"]:
            kind = item.get("type")
            if kind == "box":
                objs.append(Box(item["lo"], item["hi"]))
            elif kind == "ball":
                objs.append(Ball(item["center"], item["radius"]))
            else:
                raise GeometryError(f"unknown object type {kind!r}")
        rep = cls(tuple(objs), tuple(data.get("labels") or ()), data.get("thinness"))
        if "dimension" in data and int(data["dimension"]) != rep.dimension:
            raise GeometryError(f"declared dimension {data['dimension']} does not match objects ({rep.dimension})")
        return rep

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    @classmethod
    def from_json(cls, text: str) -> "Representation":
        return cls.from_dict(json.loads(text))


def _require_boxes(rep: Representation, what: str) -> None:
    if not rep.all_boxes():
        raise GeometryError(f"{what} is only supported for boxes")


def thinness(rep: Representation, budget: int = DEFAULT_CELL_BUDGET) -> int:
    """Maximum number of box interiors sharing a point.

    The coordinate arrangement is swept axis by axis: every open cell between
    consecutive distinct coordinates is either inside or outside each box's
    interior, so it suffices to count at one point per cell.
    """
    _require_boxes(rep, "exact thinness")
    boxes: list[Box] = list(rep.objects)  # type: ignore[arg-type]
    d = rep.dimension
    cells = 1
    for axis in range(d):
        coords = {b.lo[axis] for b in boxes} | {b.hi[axis] for b in boxes}
        cells *= max(len(coords) - 1, 1)
    if cells > budget:
        raise BudgetExceeded(
            f"arrangement has {cells} cells (budget {budget}); verify thinness structurally instead"
        )
    return _sweep_depth(boxes, 0, d)


def _sweep_depth(boxes: list[Box], axis: int, d: int) -> int:
    if not boxes:
        return 0
    if axis == d:
        return len(boxes)
    coords = sorted({b.lo[axis] for b in boxes} | {b.hi[axis] for b in boxes})
    best = 0
    for a, b in zip(coords, coords[1:]):
        mid = (a + b) / 2
        active = [bx for bx in boxes if bx.lo[axis] < mid < bx.hi[axis]]
        if len(active) > best:
            best = max(best, _sweep_depth(active, axis + 1, d))
    return best


def _random_point_in(o: GeoObject, rng: random.Random, denom: int) -> tuple[Fraction, ...]:
    if isinstance(o, Box):
        return tuple(lo + (hi - lo) * Fraction(rng.randrange(1, denom), denom) for lo, hi in zip(o.lo, o.hi))
    while True:
        p = tuple(c + o.radius * Fraction(rng.randrange(-denom + 1, denom), denom) for c in o.center)
        if _dist_sq(p, o.center) < o.radius**2:
            return p


def _interior_contains(o: GeoObject, p: Sequence[Fraction]) -> bool:
    if isinstance(o, Box):
        return all(lo < x < hi for lo, hi, x in zip(o.lo, o.hi, p))
    return _dist_sq(p, o.center) < o.radius**2


def thinness_lower_bound(rep: Representation, samples: int = 2000, seed: int = 0, denom: int = 1 << 20) -> int:
    """Monte-Carlo lower bound on the thinness, usable for balls.

    Points are drawn with rational coordinates inside randomly chosen objects,
    and the largest interior-membership count seen is returned.
    """
    rng = random.Random(seed)
    best = 1
    for _ in range(samples):
        p = _random_point_in(rng.choice(rep.objects), rng, denom)
        best = max(best, sum(_interior_contains(o, p) for o in rep.objects))
    return best


def is_m_shrinking(rep: Representation, m: int) -> bool:
    _require_boxes(rep, "is_m_shrinking")
    d = rep.dimension
    lengths = [side_length(o, d) for o in rep.objects]
    return all(a > m * b for a, b in zip(lengths, lengths[1:]))


def first_non_shrinking_pair(rep: Representation, m: int) -> Optional[tuple[int, int]]:
    d = rep.dimension
    lengths = [side_length(o, d) for o in rep.objects]
    for i in range(len(lengths) - 1):
        if not lengths[i] > m * lengths[i + 1]:
            return i, i + 1
    return None


def _dominates(a: Sequence[Fraction], b: Sequence[Fraction]) -> bool:
    return all(x >= y for x, y in zip(a, b))


def incomparable_pair(rep: Representation) -> Optional[tuple[int, int]]:
    _require_boxes(rep, "comparability")
    sides = [o.sides for o in rep.objects]  # type: ignore[union-attr]
    for i in range(len(sides)):
        for j in range(i + 1, len(sides)):
            if not (_dominates(sides[i], sides[j]) or _dominates(sides[j], sides[i])):
                return i, j
    return None


def is_comparable_boxes(rep: Representation) -> bool:
    return incomparable_pair(rep) is None


def pairwise_interiors_disjoint(rep: Representation) -> bool:
    objs = rep.objects
    return not any(interiors_overlap(objs[i], objs[j]) for i in range(len(objs)) for j in range(i + 1, len(objs)))
