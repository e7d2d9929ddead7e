"""Generating functions for parabolic-coset avoidance.

``main_theorem_gf(l, m)`` returns ``F_{l,m}(x)`` as numerator over
denominator, with the denominator the rook polynomial ``R_{lam,mu}(-x)``.
Coefficients are read off with the linear recurrence the denominator
imposes.  The module also expands the algebraic generating function for the
three-block parabolic ``P_{1,1,k-2}``, which needs a formal square root.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Sequence

from .polyalg import ExactPoly, binomial, factorial, generalized_binomial, rook_poly

__all__ = [
    "RationalGF",
    "SeriesPrefix",
    "bdpp_coefficients",
    "first_agreement_index",
    "gf_coefficients",
    "main_theorem_gf",
    "main_theorem_numerator",
    "series_mul",
    "sqrt_series",
]


@dataclass(frozen=True)
class SeriesPrefix:
    """Exact coefficients ``c_0 .. c_N`` of a power series, truncated at order ``N``."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a series prefix holds at least c_0")

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coeffs)

    def as_integers(self) -> list[int]:
        """Coefficients as ``int``; raises if any is not integral."""
        out = []
        for i, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient {i} is not an integer: {c}")
            out.append(c.numerator)
        return out


@dataclass(frozen=True)
class RationalGF:
    numerator: ExactPoly
    denominator: ExactPoly = field(default_factory=lambda: ExactPoly([1]))

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise ValueError("denominator has zero constant term; no power series at 0")


def main_theorem_numerator(l: int, m: int) -> ExactPoly:  # noqa: E741
    """Right-hand side of ``F_{l,m}(x) R_{lam,mu}(-x) = ...``.

    Two pieces: for ``r < lam`` the truncated alternating sums
    ``r! sum_j (-1)^j C(l,j) C(m,j) / C(r,j)``; for ``lam <= r < mu`` the
    collapsed terms ``(-1)^lam lam! (r-lam)! C(mu-r+lam-1, lam)``.
    """
    lam, mu = min(l, m), max(l, m)
    coeffs: list[Fraction] = []
    for r in range(lam):
        inner = sum(
            Fraction((-1) ** j * binomial(l, j) * binomial(m, j), binomial(r, j)) for j in range(r + 1)
        )
        coeffs.append(factorial(r) * inner)
    sign = (-1) ** lam
    for r in range(mu - lam):
        coeffs.append(Fraction(sign * factorial(lam) * factorial(r) * binomial(mu - r - 1, lam)))
    return ExactPoly(coeffs)


def main_theorem_gf(l: int, m: int) -> RationalGF:  # noqa: E741
    if l < 1 or m < 1:
        raise ValueError(f"need l, m >= 1, got l={l}, m={m}")
    lam, mu = min(l, m), max(l, m)
    return RationalGF(main_theorem_numerator(l, m), rook_poly(lam, mu).substitute_scaled(-1))


def gf_coefficients(gf: RationalGF, N: int) -> SeriesPrefix:
    """Expand ``numerator / denominator`` through ``x^N``.

    ``c_n = (p_n - sum_{i>=1} q_i c_{n-i}) / q_0`` where ``p`` and ``q`` are
    the numerator and denominator coefficients.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    p, q = gf.numerator, gf.denominator
    q0 = q[0]
    if q0 == 0:
        raise ValueError("denominator has zero constant term")
    tail = [(i, c) for i, c in enumerate(q.coeffs) if i >= 1 and c != 0]
    out: list[Fraction] = []
    for n in range(N + 1):
        acc = p[n]
        for i, c in tail:
            if i > n:
                break
            acc -= c * out[n - i]
        out.append(acc / q0)
    return SeriesPrefix(out)


def series_mul(a: Sequence[Fraction], b: Sequence[Fraction], N: int) -> list[Fraction]:
    """Product of two series truncated at ``x^N``."""
    out = [Fraction(0)] * (N + 1)
    for i, x in enumerate(a[: N + 1]):
        if x == 0:
            continue
        for j, y in enumerate(b[: N + 1 - i]):
            out[i + j] += x * y
    return out


def sqrt_series(p: ExactPoly, N: int) -> SeriesPrefix:
    """Square root of ``p`` as a power series through ``x^N``.

    Uses ``(1+u)^(1/2) = sum_j C(1/2, j) u^j`` with ``u = p - 1``.  As ``u``
    has no constant term, ``u^j`` starts at ``x^j`` and ``j <= N`` suffices.
    """
    if N < 0:
        raise ValueError("N must be non-negative")
    if p[0] != 1:
        raise ValueError(f"constant term must be 1, got {p[0]}")
    u = [Fraction(0)] + [p[i] for i in range(1, N + 1)]
    out = [Fraction(0)] * (N + 1)
    power = [Fraction(1)] + [Fraction(0)] * N
    half = Fraction(1, 2)
    for j in range(N + 1):
        c = generalized_binomial(half, j)
        for i, v in enumerate(power):
            out[i] += c * v
        power = series_mul(power, u, N)
    return SeriesPrefix(out)


def bdpp_coefficients(k: int, N: int) -> SeriesPrefix:
    """Coefficients through ``x^N`` of the closed form for ``F_{1,1,k-2}``.

    ``sum_{r=1}^{k-2} r! x^r + (k-3)!/2 * x^(k-4) * (1 - (k-1)x - sqrt(1 - 2(k-1)x + (k-3)^2 x^2))``.

    The expression is expanded term by term as written, with no low-order
    corrections; compare with :func:`first_agreement_index`.  For ``k = 3``
    the factor ``x^-1`` is applied as a formal division by ``x``.  This is
    legitimate because the bracket has no constant term.
    """
    if k < 3:
        raise ValueError(f"need k >= 3, got {k}")
    if N < 0:
        raise ValueError("N must be non-negative")
    shift = k - 4
    order = N - shift  # bracket terms needed so that x^shift * bracket reaches x^N
    out = [Fraction(0)] * (N + 1)
    for r in range(1, min(k - 2, N) + 1):
        out[r] += factorial(r)
    if order >= 0:
        disc = ExactPoly([1, -2 * (k - 1), (k - 3) ** 2])
        root = sqrt_series(disc, order)
        lin = [Fraction(1), Fraction(-(k - 1))]
        bracket = [(lin[i] if i < 2 else 0) - root[i] for i in range(order + 1)]
        scale = Fraction(factorial(k - 3), 2)
        if shift < 0 and bracket[0] != 0:
            raise ArithmeticError("x^(k-4) factor leaves a negative power of x")
        for i, c in enumerate(bracket):
            j = i + shift
            if 0 <= j <= N:
                out[j] += scale * c
    return SeriesPrefix(out)


def first_agreement_index(formula: Sequence, reference: Sequence) -> int:
    """Smallest ``i`` with ``formula[j] == reference[j]`` for every ``j >= i`` in range.

    Returns ``len(reference)`` when even the last terms differ.
    """
    n = min(len(formula), len(reference))
    i = n
    while i > 0 and formula[i - 1] == reference[i - 1]:
        i -= 1
    return i
