import math
from fractions import Fraction

import pytest

from parabolic_avoid.asympt import growth_estimate, il_bound, il_bound_rational, max_laguerre_root
from parabolic_avoid.counting import f_fast
from parabolic_avoid.gfengine import main_theorem_gf
from parabolic_avoid.polyalg import laguerre_poly, sign_changes, sturm_sequence

TOL = Fraction(1, 10**9)


def brackets_quadratic_root(lo, hi, a, b):
    """``lo <= a + sqrt(b) <= hi`` decided with exact rationals."""
    return (lo - a <= 0 or (lo - a) ** 2 <= b) and hi - a >= 0 and (hi - a) ** 2 >= b


# -- root isolation -------------------------------------------------------------


@pytest.mark.parametrize("k", range(2, 10))
def test_degree_one_root_is_exact(k):
    assert max_laguerre_root(1, k - 2, TOL) == (k - 1, k - 1)


def test_two_plus_root_two():
    lo, hi = max_laguerre_root(2, 0, TOL)
    assert hi - lo <= TOL
    assert brackets_quadratic_root(lo, hi, 2, 2)
    assert abs(float(lo) - (2 + math.sqrt(2))) < 1e-9


def test_three_plus_root_three():
    lo, hi = max_laguerre_root(2, 1, TOL)
    assert hi - lo <= TOL
    assert brackets_quadratic_root(lo, hi, 3, 3)


def test_root_interval_has_sign_change():
    for lam in range(2, 7):
        for alpha in range(4):
            p = laguerre_poly(lam, alpha)
            lo, hi = max_laguerre_root(lam, alpha, Fraction(1, 10**6))
            assert p(lo) * p(hi) <= 0


@pytest.mark.parametrize("lam,alpha,tol", [(0, 1, TOL), (2, -1, TOL), (2, 0, 0)])
def test_max_root_rejects_bad_input(lam, alpha, tol):
    with pytest.raises(ValueError):
        max_laguerre_root(lam, alpha, tol)


# -- the upper bound ----------------------------------------------------------


def test_il_bound_examples():
    assert il_bound(2, 2) == pytest.approx(2 + math.sqrt(5))
    assert il_bound(3, 3) == pytest.approx(4 + math.sqrt(17))
    for m in range(1, 9):
        assert il_bound(1, m) == m
    with pytest.raises(ValueError):
        il_bound(0, 3)


def test_il_bound_rational_is_an_integer_ceiling():
    for l in range(1, 9):  # noqa: E741
        for m in range(1, 9):
            r = il_bound_rational(l, m)
            assert r.denominator == 1
            assert r - 1 < il_bound(l, m) <= r


@pytest.mark.parametrize("l", range(1, 9))
def test_root_below_bound(l):  # noqa: E741
    for m in range(1, 9):
        lam, mu = min(l, m), max(l, m)
        lo, hi = max_laguerre_root(lam, mu - lam, TOL)
        assert (lo + hi) / 2 <= Fraction(il_bound(l, m)) + TOL


# -- growth estimates ---------------------------------------------------------------


def test_growth_one_by_one():
    est = growth_estimate(1, 1)
    assert est.gamma == 1 and est.c == pytest.approx(1)


def test_growth_one_by_three():
    est = growth_estimate(1, 3)
    assert est.gamma == 3
    assert est.c == pytest.approx(2 / 9, rel=1e-12)
    # f(n) = 2 * 3^(n-2) exactly once n >= 4
    assert all(f_fast(1, 3, n) == 2 * 3 ** (n - 2) for n in range(4, 30))


def test_growth_two_by_two():
    est = growth_estimate(2, 2)
    assert est.gamma == pytest.approx(2 + math.sqrt(2), abs=1e-11)
    assert est.gamma <= est.il_bound


@pytest.mark.parametrize("l,m", [(2, 2), (2, 3), (3, 3)])
def test_ratio_converges_to_gamma(l, m):  # noqa: E741
    est = growth_estimate(l, m)
    assert abs(f_fast(l, m, 40) / f_fast(l, m, 39) - est.gamma) < 1e-3


def test_dominant_pole_approximation():
    est = growth_estimate(2, 2)
    approx = est.c * est.gamma**40
    assert abs(f_fast(2, 2, 40) - approx) / approx < 1e-3


@pytest.mark.parametrize("l,m", [(2, 2), (2, 5), (3, 3), (3, 4), (4, 4)])
def test_denominator_changes_sign_across_interval(l, m):  # noqa: E741
    est = growth_estimate(l, m)
    s_hi, s_lo = est.denominator_signs
    assert s_hi * s_lo == -1


@pytest.mark.parametrize("l", range(1, 7))
def test_reciprocal_growth_is_smallest_positive_denominator_root(l):  # noqa: E741
    for m in range(1, 7):
        lam, mu = min(l, m), max(l, m)
        D = main_theorem_gf(l, m).denominator
        chain = sturm_sequence(D)
        lo, hi = max_laguerre_root(lam, mu - lam, TOL)

        def roots_in(a, b):
            # Sturm counts distinct roots in (a, b]
            return sign_changes([q(a) for q in chain]) - sign_changes([q(b) for q in chain])

        if lo == hi:
            assert D(1 / lo) == 0
            assert roots_in(0, 1 / lo) == 1
        else:
            assert D(1 / hi) != 0 and D(1 / lo) != 0
            assert roots_in(0, 1 / hi) == 0
            assert roots_in(1 / hi, 1 / lo) == 1


def test_estimate_report():
    doc = growth_estimate(2, 2).as_dict()
    assert set(doc) >= {"gamma", "c", "gamma_interval", "il_bound"}
    lo, hi = (Fraction(x) for x in doc["gamma_interval"])
    assert hi - lo <= Fraction(1, 10**12)
