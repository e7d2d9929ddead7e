"""Exact univariate polynomials over the rationals.

Polynomials are dense: ``coeffs[i]`` is the coefficient of ``x**i``.  All
coefficients are :class:`fractions.Fraction`, which keeps every value reduced
with a positive denominator, so two polynomials are equal exactly when their
coefficient tuples are equal.

Besides ring arithmetic this module builds the two polynomial families the
counting results are phrased in: rook polynomials of rectangular boards and
generalized Laguerre polynomials, together with the identity linking them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial as _factorial
from numbers import Rational
from typing import Iterable, Sequence

__all__ = [
    "ExactPoly",
    "X",
    "ZERO_DEGREE",
    "binomial",
    "check_rook_laguerre",
    "factorial",
    "generalized_binomial",
    "laguerre_poly",
    "poly_add",
    "poly_eval",
    "poly_mul",
    "poly_scale",
    "rook_placements_brute",
    "rook_poly",
    "sturm_sequence",
    "sign_changes",
]

#: Degree reported for the zero polynomial.  Behaves as -infinity, so
#: ``deg(p * q) == deg(p) + deg(q)`` holds without special cases.
ZERO_DEGREE = float("-inf")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return _factorial(n)


def binomial(n: int, j: int) -> int:
    """Binomial coefficient with the convention ``binomial(n, j) == 0`` outside ``0 <= j <= n``."""
    if j < 0 or n < 0 or j > n:
        return 0
    return comb(n, j)


def generalized_binomial(r: Fraction | int, j: int) -> Fraction:
    """``r * (r-1) * ... * (r-j+1) / j!`` for rational ``r``; used for binomial series."""
    if j < 0:
        return Fraction(0)
    r = Fraction(r)
    out = Fraction(1)
    for i in range(j):
        out *= (r - i) / (i + 1)
    return out


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"polynomial coefficients must be exact rationals, got {type(c).__name__}")


class ExactPoly:
    """Immutable dense polynomial with :class:`Fraction` coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_as_fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> ExactPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c) -> ExactPoly:
        return cls([c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int | float:
        return len(self._c) - 1 if self._c else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self._c

    def __getitem__(self, i: int) -> Fraction:
        if i < 0:
            raise IndexError("negative coefficient index")
        return self._c[i] if i < len(self._c) else Fraction(0)

    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, ExactPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == ExactPoly([other])._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"ExactPoly({[str(c) for c in self._c]})"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        terms = []
        for i, c in enumerate(self._c):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{i}")
        return " + ".join(terms)

    @staticmethod
    def _coerce(other) -> ExactPoly:
        if isinstance(other, ExactPoly):
            return other
        return ExactPoly([other])

    def __add__(self, other) -> ExactPoly:
        other = self._coerce(other)
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return ExactPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> ExactPoly:
        return ExactPoly([-c for c in self._c])

    def __sub__(self, other) -> ExactPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> ExactPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> ExactPoly:
        if not isinstance(other, ExactPoly):
            return self.scale(other)
        if not self._c or not other._c:
            return ExactPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, x in enumerate(self._c):
            if x == 0:
                continue
            for j, y in enumerate(other._c):
                out[i + j] += x * y
        return ExactPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> ExactPoly:
        if e < 0:
            raise ValueError("negative polynomial power")
        out, base = ExactPoly([1]), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c) -> ExactPoly:
        c = _as_fraction(c)
        return ExactPoly([c * x for x in self._c])

    def shift(self, k: int) -> ExactPoly:
        """Multiply by ``x**k`` (``k >= 0``)."""
        if k < 0:
            raise ValueError("use divmod for division by powers of x")
        return ExactPoly([0] * k + list(self._c)) if self._c else self

    def substitute_scaled(self, c) -> ExactPoly:
        """Return ``p(c*x)``; ``c = -1`` gives ``p(-x)``."""
        c = _as_fraction(c)
        return ExactPoly([x * c**i for i, x in enumerate(self._c)])

    def reversed(self, degree: int | None = None) -> ExactPoly:
        """``x**degree * p(1/x)``, with ``degree`` defaulting to ``deg p``."""
        if degree is None:
            degree = len(self._c) - 1
        if degree < len(self._c) - 1:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self._c) + [Fraction(0)] * (degree + 1 - len(self._c))
        return ExactPoly(padded[::-1])

    def derivative(self) -> ExactPoly:
        return ExactPoly([i * c for i, c in enumerate(self._c)][1:])

    def __call__(self, x):
        """Horner evaluation; exact for rational ``x``."""
        acc = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: ExactPoly) -> tuple[ExactPoly, ExactPoly]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = len(other._c) - 1
        lead = other._c[-1]
        if len(rem) - 1 < dq:
            return ExactPoly(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1 - dq, -1, -1):
            q = rem[i + dq] / lead
            quot[i] = q
            if q:
                for j, c in enumerate(other._c):
                    rem[i + j] -= q * c
        return ExactPoly(quot), ExactPoly(rem[:dq])

    def __floordiv__(self, other: ExactPoly) -> ExactPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: ExactPoly) -> ExactPoly:
        return divmod(self, other)[1]


X = ExactPoly([0, 1])


def poly_add(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    return p + q


def poly_mul(p: ExactPoly, q: ExactPoly) -> ExactPoly:
    return p * q


def poly_scale(p: ExactPoly, c) -> ExactPoly:
    return p.scale(c)


def poly_eval(p: ExactPoly, x) -> Fraction:
    return p(_as_fraction(x))


def rook_poly(s: int, t: int) -> ExactPoly:
    """Rook polynomial of the ``s x t`` board: sum_j j! C(s,j) C(t,j) x^j.

    The formula is symmetric in ``s`` and ``t``, so no swap is needed.
    """
    if s < 0 or t < 0:
        raise ValueError(f"board dimensions must be non-negative, got {s}x{t}")
    return ExactPoly([factorial(j) * binomial(s, j) * binomial(t, j) for j in range(min(s, t) + 1)])


def rook_placements_brute(s: int, t: int) -> list[int]:
    """Count non-attacking rook placements on an ``s x t`` board by exhaustive search.

    Entry ``j`` of the result is the number of ways to put ``j`` rooks on the
    board with no two sharing a row or column.  Rows are scanned one at a time;
    each row is either left empty or receives a rook in a free column.
    """
    if s < 0 or t < 0:
        raise ValueError(f"board dimensions must be non-negative, got {s}x{t}")
    counts = [0] * (min(s, t) + 1)

    def place(row: int, used_cols: int, rooks: int) -> None:
        if row == s:
            counts[rooks] += 1
            return
        place(row + 1, used_cols, rooks)
        for col in range(t):
            if not used_cols >> col & 1:
                place(row + 1, used_cols | 1 << col, rooks + 1)

    place(0, 0, 0)
    return counts


def laguerre_poly(n: int, alpha: int) -> ExactPoly:
    """Generalized Laguerre polynomial ``L_n^alpha`` from its explicit sum.

    ``L_n^alpha(x) = sum_{i=0}^{n} (-1)^i C(n+alpha, n-i) x^i / i!``.

    Agreement with the Rodrigues form ``(1/n!) e^x x^-alpha (d/dx)^n (e^-x x^(n+alpha))``,
    worked by hand:

    * n = 0: the derivative is the function itself, giving 1.
    * n = 1: d/dx(e^-x x^(1+a)) = e^-x x^a ((1+a) - x), so L_1 = (1+a) - x.
    * n = 2: the second derivative is e^-x x^a ((2+a)(1+a) - 2(2+a)x + x^2);
      halving gives C(2+a,2) - (2+a)x + x^2/2.
    * n = 3: expanding by Leibniz, sum_i C(3,i) (-1)^(3-i) (3+a)_i x^(3+a-i)
      e^-x with falling factorials, then dividing by 3! gives
      C(3+a,3) - C(3+a,2)x + C(3+a,1)x^2/2 - x^3/6.

    Each line matches the sum above term for term.  The three-term recurrence
    is checked in the test-suite as well.
    """
    if n < 0:
        raise ValueError(f"Laguerre degree must be non-negative, got {n}")
    if alpha < -n:
        raise ValueError(f"alpha must be at least -n, got alpha={alpha}, n={n}")
    return ExactPoly(
        [Fraction((-1) ** i * binomial(n + alpha, n - i), factorial(i)) for i in range(n + 1)]
    )


def check_rook_laguerre(s: int, t: int) -> bool:
    """Test ``R_{s,t}(x) == s! x^s L_s^{t-s}(-1/x)`` by exact coefficient comparison.

    ``x^s L(-1/x)`` has coefficient ``(-1)^i c_i`` at ``x^(s-i)``, where ``c_i``
    is the coefficient of ``x^i`` in ``L``, so the right side is the reversed,
    sign-twisted, scaled Laguerre polynomial.
    """
    if s > t:
        raise ValueError(f"need s <= t, got s={s}, t={t}")
    lag = laguerre_poly(s, t - s)
    rhs = lag.substitute_scaled(-1).reversed(s).scale(factorial(s))
    return rhs == rook_poly(s, t)


def sturm_sequence(p: ExactPoly) -> list[ExactPoly]:
    """Sturm chain ``p, p', -rem(p, p'), ...`` with exact remainders."""
    if p.is_zero():
        raise ValueError("Sturm sequence of the zero polynomial")
    seq = [p, p.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def sign_changes(values: Sequence) -> int:
    """Sign changes in a sequence, zeros skipped."""
    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)
