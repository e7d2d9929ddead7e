"""Growth rate and leading constant of ``f_{l,m}(n) ~ c * gamma^n``.

``gamma`` is the largest root of ``L_lam^(mu-lam)``.  It is isolated by
bisection over exact rationals.  Sturm chains certify that no root lies above
the bracket.  The sign change at the bracket ends certifies the root inside.
Floats appear only in the reported summary values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .gfengine import main_theorem_gf
from .polyalg import ExactPoly, laguerre_poly, sign_changes, sturm_sequence

__all__ = [
    "AsymptoticEstimate",
    "growth_estimate",
    "il_bound",
    "il_bound_rational",
    "max_laguerre_root",
]


def il_bound(l: int, m: int) -> float:  # noqa: E741
    """Upper bound ``k - 2 + sqrt(1 + 4(l-1)(m-1))`` on the growth rate."""
    if l < 1 or m < 1:
        raise ValueError(f"need l, m >= 1, got l={l}, m={m}")
    return l + m - 2 + math.sqrt(1 + 4 * (l - 1) * (m - 1))


def il_bound_rational(l: int, m: int) -> Fraction:  # noqa: E741
    """Smallest integer not below :func:`il_bound`, computed without floats."""
    disc = 1 + 4 * (l - 1) * (m - 1)
    r = math.isqrt(disc)
    if r * r < disc:
        r += 1
    return Fraction(l + m - 2 + r)


def _roots_above(chain: list[ExactPoly], x: Fraction) -> int:
    """Distinct real roots in ``(x, +inf)``."""
    at_x = sign_changes([p(x) for p in chain])
    at_inf = sign_changes([p.leading() for p in chain])
    return at_x - at_inf


def max_laguerre_root(lam: int, alpha: int, tol: Fraction | float) -> tuple[Fraction, Fraction]:
    """Interval ``(lo, hi)`` with ``hi - lo <= tol`` holding the largest root of ``L_lam^alpha``.

    The search starts from ``(0, U]`` where ``U`` exceeds the growth-rate
    bound by one.  At every step ``(hi, inf)`` holds no root and ``(lo, hi]``
    holds the largest one.  A root hit exactly is returned as ``(r, r)``.
    """
    if lam < 1:
        raise ValueError("L_0 is constant and has no roots")
    if alpha < 0:
        raise ValueError("alpha must be non-negative")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    p = laguerre_poly(lam, alpha)
    if lam == 1:
        root = -p[0] / p[1]
        return root, root
    chain = sturm_sequence(p)
    lo, hi = Fraction(0), il_bound_rational(lam, lam + alpha) + 1
    if _roots_above(chain, hi) != 0 or _roots_above(chain, lo) < 1:
        raise ArithmeticError("initial bracket does not isolate the largest root")
    if p(hi) == 0:
        return hi, hi
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if p(mid) == 0 and _roots_above(chain, mid) == 0:
            return mid, mid
        if _roots_above(chain, mid) >= 1:
            lo = mid
        else:
            hi = mid
    return lo, hi


@dataclass(frozen=True)
class AsymptoticEstimate:
    l: int  # noqa: E741
    m: int
    gamma: float
    c: float
    gamma_interval: tuple[Fraction, Fraction]
    il_bound: float
    #: signs of ``R_{lam,mu}(-x)`` at ``1/hi`` and ``1/lo``; opposite unless the root is exact
    denominator_signs: tuple[int, int]

    def as_dict(self) -> dict:
        lo, hi = self.gamma_interval
        return {
            "l": self.l,
            "m": self.m,
            "gamma": repr(self.gamma),
            "gamma_interval": [str(lo), str(hi)],
            "c": repr(self.c),
            "il_bound": repr(self.il_bound),
            "denominator_signs": list(self.denominator_signs),
        }


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def growth_estimate(l: int, m: int, tol: Fraction | float = Fraction(1, 10**12)) -> AsymptoticEstimate:  # noqa: E741
    """``gamma`` and ``c`` with ``f(n) ~ c * gamma^n``.

    ``F = N/D`` has its dominant simple pole at ``r = 1/gamma``, so
    ``c = -N(r) / (r * D'(r))``.  ``r`` is taken at the interval midpoint and
    the residue is evaluated exactly there.
    """
    if l < 1 or m < 1:
        raise ValueError(f"need l, m >= 1, got l={l}, m={m}")
    lam, mu = min(l, m), max(l, m)
    lo, hi = max_laguerre_root(lam, mu - lam, tol)
    gamma = (lo + hi) / 2
    gf = main_theorem_gf(l, m)
    D = gf.denominator
    dD = D.derivative()
    r = 1 / gamma
    slope = dD(r)
    if slope == 0:
        raise ArithmeticError("denominator derivative vanishes at the dominant root")
    c = -gf.numerator(r) / (r * slope)
    signs = (_sign(D(1 / hi)), _sign(D(1 / lo)) if lo > 0 else _sign(D[0]))
    return AsymptoticEstimate(
        l=l,
        m=m,
        gamma=float(gamma),
        c=float(c),
        gamma_interval=(lo, hi),
        il_bound=il_bound(l, m),
        denominator_signs=signs,
    )
