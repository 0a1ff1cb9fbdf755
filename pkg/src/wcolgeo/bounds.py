"""Closed-form upper and lower bounds on generalized coloring numbers.

All values are exact Python integers. Where a real parameter ``b`` enters a
product that is used as an integer (a binomial argument or a count), the
product is rounded up and both the raw and the rounded value are kept.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Union

from .radius import FTable, table_value


@dataclass(frozen=True)
class BoundCase:
    """Object class: ``"a"`` homothets of a centrally symmetric body (or comparable
    boxes), ``"b"`` b-ball-like bodies, ``"c"`` balls."""

    kind: str
    t: int = 1
    d: int = 1
    b: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind not in ("a", "b", "c"):
            raise ValueError(f"unknown case {self.kind!r}")
        if self.t < 1 or self.d < 1:
            raise ValueError("t and d must be positive")
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b < 1:
            raise ValueError("b must be at least 1")

    @classmethod
    def central(cls, t: int, d: int) -> "BoundCase":
        return cls("a", t, d)

    @classmethod
    def ball_like(cls, b: Union[int, str, Fraction], t: int, d: int) -> "BoundCase":
        return cls("b", t, d, Fraction(b))

    @classmethod
    def balls(cls, t: int, d: int) -> "BoundCase":
        return cls("c", t, d)


@dataclass(frozen=True)
class Rounded:
    raw: Fraction
    value: int


def _up(q: Fraction) -> Rounded:
    return Rounded(q, math.ceil(q))


def log_factor(k: int) -> int:
    """``max(1, ceil(log2 k))`` computed on integers."""
    return max(1, (k - 1).bit_length())


def scol_upper(case: BoundCase, k: int) -> int:
    """Strong coloring bound for sizewise orderings of t-thin families."""
    if k < 1:
        raise ValueError("k must be positive")
    if case.kind == "b":
        return _up(case.b * case.t * (2 * k + 2) ** case.d).value
    return case.t * (2 * k + 1) ** case.d


def wcol_recurrence_upper(scol_bounds: Sequence[int]) -> int:
    """W_k from W_0 = 1 and W_j = sum_{i=1..j} s_i W_{j-i}."""
    W = [1]
    for j in range(1, len(scol_bounds) + 1):
        W.append(sum(scol_bounds[i - 1] * W[j - i] for i in range(1, j + 1)))
    return W[-1]


@dataclass(frozen=True)
class WeakBound:
    value: int
    multiplier: Rounded
    binom_param: Rounded
    caveat: Optional[str] = None


def thm_weak_upper_detail(case: BoundCase, k: int, k0: Optional[int] = None) -> WeakBound:
    if k < 1:
        raise ValueError("k must be positive")
    t, d, lf = case.t, case.d, log_factor(k)
    if case.kind == "a":
        mult = _up(Fraction(t * (4 * k - 1) ** d))
        e = _up(Fraction(t * 5**d))
    elif case.kind == "b":
        mult = _up(case.b * t * (4 * k) ** d)
        e = _up(case.b * t * 6**d)
    else:
        mult = _up(Fraction(t * (4 * k - 1) ** d))
        e = _up(Fraction(2 * t))
    value = lf * mult.value * math.comb(k + e.value + 2, e.value + 2)
    caveat = None
    if case.kind == "c":
        if k0 is None:
            caveat = "valid only for k >= k0(d); k0 not supplied"
        elif k < k0:
            caveat = f"k={k} < k0={k0}: bound not guaranteed"
    return WeakBound(value, mult, e, caveat)


def thm_weak_upper(case: BoundCase, k: int, k0: Optional[int] = None) -> int:
    """Weak coloring bound for sizewise orderings of t-thin families."""
    return thm_weak_upper_detail(case, k, k0).value


def generic_theorem_upper(f: FTable, e: int, k: int) -> int:
    """``max(1, ceil(log2 k)) * f(2k-2) * C(k+e+2, e+2)``."""
    if k < 1:
        raise ValueError("k must be positive")
    return log_factor(k) * table_value(f, 2 * k - 2) * math.comb(k + e + 2, e + 2)


def property_p_parameters(case: BoundCase):
    """The (f, a, e) for which intersection graphs in ``case`` with r = diameter have
    property P; for balls ``a`` exists but is not computed and is returned as None."""
    t, d, b = case.t, case.d, case.b
    if case.kind == "a":
        return (lambda p: t * (2 * p + 3) ** d), 1, t * 5**d
    if case.kind == "b":
        return (lambda p: math.ceil(t * b * (2 * p + 4) ** d)), 1, math.ceil(t * b * 6**d)
    return (lambda p: t * (2 * p + 3) ** d), None, 2 * t


LB_KINDS = ("boxes3d", "thin_squares", "hypercubes")


def lb_value(kind: str, k: int, t: Optional[int] = None, d: Optional[int] = None) -> int:
    """Lower bound on wcol_{2k} achieved by the constructed families."""
    if kind == "boxes3d":
        return 2 ** (k + 1) - 1
    if kind == "thin_squares":
        if t is None:
            raise ValueError("thin_squares needs t")
        return math.comb(k + t, t)
    if kind == "hypercubes":
        if d is None:
            raise ValueError("hypercubes needs d")
        return math.comb(k + 2**d - 1, 2**d - 1)
    raise ValueError(f"unknown kind {kind!r}; expected one of {LB_KINDS}")
