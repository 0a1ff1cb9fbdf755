import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from wcolgeo.bounds import (
    BoundCase,
    generic_theorem_upper,
    lb_value,
    log_factor,
    property_p_parameters,
    scol_upper,
    thm_weak_upper,
    thm_weak_upper_detail,
    wcol_recurrence_upper,
)


def test_scol_examples():
    assert scol_upper(BoundCase.central(1, 2), 1) == 9
    assert scol_upper(BoundCase.ball_like(1, 1, 1), 1) == 4
    assert scol_upper(BoundCase.central(2, 3), 2) == 250
    assert [scol_upper(BoundCase.central(1, 2), k) for k in range(1, 5)] == [9, 25, 49, 81]


def test_scol_ball_like_rounds_up():
    # 3/2 * 1 * 4 = 6 exactly; 4/3 * 1 * 4 = 16/3 rounds to 6
    assert scol_upper(BoundCase.ball_like("3/2", 1, 1), 1) == 6
    assert scol_upper(BoundCase.ball_like(F(4, 3), 1, 1), 1) == 6


def test_recurrence_examples():
    assert wcol_recurrence_upper([1, 1]) == 2
    assert wcol_recurrence_upper([3]) == 3
    for c in (2, 3):
        for k in range(1, 11):
            assert wcol_recurrence_upper([c**i for i in range(1, k + 1)]) <= (2 * c) ** k


def test_log_factor():
    assert [log_factor(k) for k in (1, 2, 3, 4, 5, 8, 9, 16, 17)] == [1, 1, 2, 2, 3, 3, 4, 4, 5]
    for k in range(1, 200):
        assert log_factor(k) == max(1, math.ceil(math.log2(k)))


def test_weak_examples():
    assert thm_weak_upper(BoundCase.central(1, 1), 1) == 24
    assert thm_weak_upper(BoundCase.central(1, 2), 2) == 49 * math.comb(29, 27) == 19894
    for d in (1, 2, 3):
        assert thm_weak_upper(BoundCase.balls(1, d), 4, k0=1) == 140 * 15**d


def test_ball_caveat():
    assert thm_weak_upper_detail(BoundCase.balls(1, 2), 3).caveat
    assert thm_weak_upper_detail(BoundCase.balls(1, 2), 3, k0=5).caveat
    assert thm_weak_upper_detail(BoundCase.balls(1, 2), 5, k0=5).caveat is None
    assert thm_weak_upper_detail(BoundCase.central(1, 2), 3).caveat is None


def test_generic_examples():
    assert generic_theorem_upper({0: 5}, 1, 1) == 20
    assert generic_theorem_upper({2: 9}, 2, 2) == 135
    with pytest.raises(ValueError):
        generic_theorem_upper({0: 5}, 1, 2)  # f(2) missing


def test_lb_examples():
    assert lb_value("boxes3d", 3) == 15
    assert lb_value("thin_squares", 2, t=2) == 6
    assert lb_value("hypercubes", 1, d=1) == 2
    assert [lb_value("boxes3d", k) for k in range(1, 6)] == [3, 7, 15, 31, 63]
    assert lb_value("thin_squares", 2, t=3) == 10


def test_case_validation():
    with pytest.raises(ValueError):
        BoundCase("z", 1, 1)
    with pytest.raises(ValueError):
        BoundCase.ball_like(F(1, 2), 1, 1)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 16), st.sampled_from(["1", "3/2", "7/4", "2"]))
def test_weak_equals_generic_with_property_p_parameters(t, d, k, b):
    for case in (BoundCase.central(t, d), BoundCase.ball_like(b, t, d)):
        f, a, e = property_p_parameters(case)
        assert a == 1
        assert thm_weak_upper(case, k) == generic_theorem_upper(f, e, k)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(1, 12))
def test_weak_formula_reevaluated(t, d, k):
    lf = 1 if k == 1 else math.ceil(math.log2(k))
    want = t * lf * (4 * k - 1) ** d * math.comb(k + t * 5**d + 2, t * 5**d + 2)
    assert thm_weak_upper(BoundCase.central(t, d), k) == want
    want_balls = t * lf * (4 * k - 1) ** d * math.comb(k + 2 * t + 2, 2 * t + 2)
    assert thm_weak_upper(BoundCase.balls(t, d), k, k0=1) == want_balls
