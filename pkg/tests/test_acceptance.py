"""Acceptance criteria, one test per criterion.

Run ``pytest tests/test_acceptance.py`` to get one PASS/FAIL line per criterion
in the terminal summary.
"""

import math
import time
from fractions import Fraction

import pytest

from parabolic_avoid.asympt import growth_estimate, il_bound, max_laguerre_root
from parabolic_avoid.counting import (
    M_closed,
    M_direct,
    boundary_A,
    box_sums,
    corollary11,
    f_brute,
    f_fast,
    f_sequence,
    theorem25_formula,
    verify_lemma24,
    verify_theorem23,
)
from parabolic_avoid.gfengine import bdpp_coefficients, first_agreement_index, gf_coefficients, main_theorem_gf
from parabolic_avoid.permcore import AvoidanceClass, enumerate_avoiders, parabolic_subgroup
from parabolic_avoid.polyalg import binomial, check_rook_laguerre, rook_placements_brute, rook_poly

N_MAX = 9


def block_pairs(max_k):
    return [(l, k - l) for k in range(2, max_k + 1) for l in range(1, k)]  # noqa: E741


def classes_a_le_m(max_k):
    return [AvoidanceClass(l, m, a) for l, m in block_pairs(max_k) for a in range(m + 1)]


@pytest.fixture(scope="module")
def brute_counts():
    """``{(l, m, a): [f(0), ..., f(9)]}`` by enumeration, for every coset with ``k <= 5``."""
    table = {}
    for l, m in block_pairs(5):  # noqa: E741
        for a in range(l + m):
            table[l, m, a] = [f_brute(AvoidanceClass(l, m, a), n) for n in range(N_MAX + 1)]
    return table


@pytest.mark.criterion(1, "generating function and recurrence equal brute force, k <= 5, n <= 9, all a")
def test_criterion_01_generating_function(brute_counts):
    mismatches = []
    for (l, m, a), brute in sorted(brute_counts.items()):  # noqa: E741
        series = gf_coefficients(main_theorem_gf(l, m), N_MAX).as_integers()
        fast = [f_fast(l, m, n) for n in range(N_MAX + 1)]
        if not brute == series == fast:
            mismatches.append((l, m, a, brute, series, fast))
    print(f"criterion 1: {len(brute_counts)} cosets x {N_MAX + 1} lengths, {len(mismatches)} mismatches")
    assert not mismatches


@pytest.mark.criterion(2, "counts do not depend on the coset index a")
def test_criterion_02_a_independence(brute_counts):
    by_pair = {}
    for (l, m, a), counts in brute_counts.items():  # noqa: E741
        by_pair.setdefault((l, m), set()).add(tuple(counts))
    spread = {pair: len(v) for pair, v in by_pair.items() if len(v) != 1}
    assert len(by_pair) == len(block_pairs(5))
    assert not spread


@pytest.mark.criterion(3, "closed form for l = 1 matches the recurrence, k <= 6, n <= 20")
def test_criterion_03_l_equals_one():
    for k in range(2, 7):
        for n in range(21):
            assert corollary11(k, n) == f_fast(1, k - 1, n), (k, n)
            if n >= k:
                expected = math.factorial(k - 2) * (k - 1) ** (n + 2 - k)
                assert f_fast(1, k - 1, n) == expected


@pytest.mark.criterion(4, "hypergeometric sum: direct equals closed form, s <= t <= 8, s <= n <= 2(s+t)")
def test_criterion_04_hypergeometric_sum():
    cases = 0
    for s in range(1, 9):
        for t in range(s, 9):
            for n in range(s, 2 * (s + t) + 1):
                assert M_direct(s, t, n) == M_closed(s, t, n), (s, t, n)
                cases += 1
    print(f"criterion 4: {cases} exact cases")


@pytest.mark.criterion(5, "box sum A(n,d) equals the alternating sum; boundary values at n = k")
def test_criterion_05_alternating_sum(brute_counts):
    cases = 0
    for cls in classes_a_le_m(5):
        f = brute_counts[cls.l, cls.m, cls.a]
        for d in range(cls.l + 1):
            assert box_sums(cls, cls.k)["A"][d] == boundary_A(cls.l, cls.m, d), (cls, d)
            k, l = cls.k, cls.l  # noqa: E741
            expected = math.factorial(d) * binomial(l, d) * math.factorial(k - d) - math.factorial(l) * math.factorial(cls.m)
            assert boundary_A(cls.l, cls.m, d) == expected
        for n in range(cls.k, 9):
            A = box_sums(cls, n)["A"]
            for d in range(cls.l + 1):
                assert A[d] == theorem25_formula(cls, n, d, f), (cls, n, d)
                cases += 1
    print(f"criterion 5: {cases} (class, n, d) cases with a <= m")


@pytest.mark.criterion(6, "three-term box recurrence and the A/B/C identities, k <= 5, n <= 8")
def test_criterion_06_box_identities():
    cases = 0
    for cls in classes_a_le_m(5):
        for n in range(cls.k, 9):
            for d in range(1, cls.l + 1):
                check = verify_lemma24(cls, n, d)
                assert check, check.as_dict()
                cases += 1
                if n >= cls.k + 1 and d <= cls.l - 1:
                    check = verify_theorem23(cls, n, d)
                    assert check, check.as_dict()
                    cases += 1
    print(f"criterion 6: {cases} checks with a <= m")


@pytest.mark.criterion(7, "rook polynomial equals scaled Laguerre, s <= t <= 8; rook counts by brute force")
def test_criterion_07_rook_laguerre():
    for s in range(9):
        for t in range(s, 9):
            assert check_rook_laguerre(s, t), (s, t)
    for s in range(6):
        for t in range(6):
            assert [int(c) for c in rook_poly(s, t).coeffs] == rook_placements_brute(s, t), (s, t)


@pytest.mark.criterion(8, "growth rate: certified interval, ratio test and upper bound")
def test_criterion_08_asymptotics():
    tol = Fraction(1, 10**9)
    lo, hi = max_laguerre_root(2, 0, tol)
    assert hi - lo <= tol
    # lo <= 2 + sqrt(2) <= hi, decided exactly
    assert (lo - 2) ** 2 <= 2 <= (hi - 2) ** 2 and lo > 2
    est = growth_estimate(2, 2)
    ratio = f_fast(2, 2, 40) / f_fast(2, 2, 39)
    assert abs(ratio - est.gamma) < 1e-3
    assert est.gamma <= 2 + math.sqrt(5)
    for l in range(1, 9):  # noqa: E741
        for m in range(1, 9):
            lam, mu = min(l, m), max(l, m)
            lo, hi = max_laguerre_root(lam, mu - lam, tol)
            # gamma <= hi <= k - 2 + sqrt(disc), the second step decided exactly
            excess, disc = hi - (l + m - 2), 1 + 4 * (l - 1) * (m - 1)
            assert excess <= 0 or excess**2 <= disc, (l, m)
            assert il_bound(l, m) >= float(lo)
    print(f"criterion 8: gamma {est.gamma!r}, |ratio - gamma| = {abs(ratio - est.gamma):.3e}")


@pytest.mark.criterion(9, "three-block closed form matches brute force from its first agreement index")
def test_criterion_09_three_block():
    for k in (3, 4, 5):
        formula = bdpp_coefficients(k, N_MAX).as_integers()
        T = parabolic_subgroup(k, [1, 2])
        brute = [enumerate_avoiders(n, T) for n in range(N_MAX + 1)]
        first = first_agreement_index(formula, brute)
        print(f"criterion 9: k={k} first agreement index {first}; below it formula {formula[:first]}, brute {brute[:first]}")
        # the tail from x^k onward must match; anything below is reported above
        assert first <= k
        assert formula[k:] == brute[k:]
        if k == 3:
            catalan = [binomial(2 * n, n) // (n + 1) for n in range(N_MAX + 1)]
            assert formula[first:] == catalan[first:]
            assert brute == catalan


@pytest.mark.criterion(10, "f(3,3,1000) exact in under a second")
def test_criterion_10_performance():
    start = time.perf_counter()
    value = f_fast(3, 3, 1000)
    elapsed = time.perf_counter() - start
    print(f"criterion 10: {elapsed:.4f} s, {len(str(value))} digits")
    assert elapsed < 1.0
    assert isinstance(value, int) and value > 0
    f = f_sequence(3, 3, 1000)
    assert f[1000] == value
    # denominator 1 - 9x + 18x^2 - 6x^3
    assert value == 9 * f[999] - 18 * f[998] + 6 * f[997]
