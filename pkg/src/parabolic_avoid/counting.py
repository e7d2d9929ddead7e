"""Exact counting of coset avoiders and oracles for the intermediate quantities.

``f_fast`` runs the order-``lam`` linear recurrence satisfied by
``f(n) = |S_n(sigma^a P_{l,m})|``, which does not depend on ``a``.

The remaining functions recompute by brute force the quantities behind that
recurrence:

* ``g_n(i_1..i_d)``, the avoiders with a prescribed prefix;
* the box sums ``A``, ``B``, ``C`` of ``g_n`` over ``[a+1,b]^d``,
  ``[a+1,b+1]^d`` and ``[a,b]^d``, where ``b = n - m + a``;

and check the identities among them.  The box sums are defined for
``0 <= a <= m``.  Classes with ``a > m`` have the same counts as their
reverse-complement mirror ``(m, l, k-a)``, which does satisfy ``a <= m``.

Verifiers return a :class:`Check`, which is truthy iff the identity held and
records both sides for diagnosis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .permcore import (
    AvoidanceClass,
    avoider_words,
    brute_force_ceiling,
    enumerate_avoiders,
    iter_avoiders,
    parabolic_coset,
)
from .polyalg import binomial, factorial

__all__ = [
    "BruteForceLimitError",
    "Check",
    "PrefixSpec",
    "SumTable",
    "boundary_A",
    "check_equal",
    "require_within_ceiling",
    "box_sums",
    "corollary11",
    "f_brute",
    "f_fast",
    "f_sequence",
    "g_oracle",
    "M_closed",
    "M_direct",
    "reduction_identity_sides",
    "sum_oracle",
    "sum_table",
    "theorem25_formula",
    "verify_boundary_A",
    "verify_lemma22",
    "verify_lemma24",
    "verify_reduction_identity",
    "verify_theorem23",
    "verify_theorem25",
]


class BruteForceLimitError(ValueError):
    """Raised when an oracle is asked for ``n`` above the brute-force ceiling."""


def require_within_ceiling(n: int, ceiling: int | None) -> None:
    limit = brute_force_ceiling(ceiling)
    if n > limit:
        raise BruteForceLimitError(
            f"n={n} exceeds the brute-force ceiling {limit}; "
            "raise it with ceiling= or PARABOLIC_AVOID_BF_CEILING"
        )


@dataclass(frozen=True)
class Check:
    """Outcome of one identity check."""

    name: str
    inputs: dict
    lhs: object
    rhs: object
    ok: bool
    detail: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    def as_dict(self) -> dict:
        def enc(v):
            if isinstance(v, (int, Fraction)) and not isinstance(v, bool):
                return str(v)
            if isinstance(v, (list, tuple)):
                return [enc(x) for x in v]
            if isinstance(v, dict):
                return {str(k): enc(x) for k, x in v.items()}
            return v

        return {
            "name": self.name,
            "inputs": dict(self.inputs),
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "pass": self.ok,
            **({"detail": enc(self.detail)} if self.detail else {}),
        }


def check_equal(name: str, inputs: dict, lhs, rhs, **detail) -> Check:
    return Check(name, inputs, lhs, rhs, lhs == rhs, detail)


# -- fast counting ----------------------------------------------------------


def f_sequence(l: int, m: int, N: int) -> list[int]:  # noqa: E741
    """``[f(0), ..., f(N)]`` for ``P_{l,m}``.

    Seeds are ``f(r) = r!`` for ``r < k`` and ``f(k) = k! - l! m!``; after that
    ``f(n) = sum_{j=1}^{lam} (-1)^(j+1) j! C(l,j) C(m,j) f(n-j)``.
    """
    if l < 1 or m < 1:
        raise ValueError(f"need l, m >= 1, got l={l}, m={m}")
    if N < 0:
        return []
    k = l + m
    lam = min(l, m)
    weights = [(-1) ** (j + 1) * factorial(j) * binomial(l, j) * binomial(m, j) for j in range(lam + 1)]
    f = [factorial(r) for r in range(min(N, k - 1) + 1)]
    if N >= k:
        f.append(factorial(k) - factorial(l) * factorial(m))
    for n in range(k + 1, N + 1):
        f.append(sum(weights[j] * f[n - j] for j in range(1, lam + 1)))
    return f


def f_fast(l: int, m: int, n: int) -> int:  # noqa: E741
    if n < 0:
        raise ValueError("n must be non-negative")
    return f_sequence(l, m, n)[n]


def corollary11(k: int, n: int) -> int:
    """Closed form for ``l = 1``: ``(k-2)! (k-1)^(n+2-k)`` when ``n >= k``, else ``n!``."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < k:
        return factorial(n)
    return factorial(k - 2) * (k - 1) ** (n + 2 - k)


def f_brute(cls: AvoidanceClass, n: int, *, ceiling: int | None = None) -> int:
    require_within_ceiling(n, ceiling)
    return enumerate_avoiders(n, parabolic_coset(cls))


# -- prefix counts and box sums ---------------------------------------------


@dataclass(frozen=True)
class PrefixSpec:
    n: int
    prefix: tuple[int, ...]
    cls: AvoidanceClass

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if len(self.prefix) > self.n:
            raise ValueError(f"prefix longer than n={self.n}")
        bad = [i for i in self.prefix if not 1 <= i <= self.n]
        if bad:
            raise ValueError(f"prefix entries {bad} outside 1..{self.n}")

    @property
    def d(self) -> int:
        return len(self.prefix)


def g_oracle(spec: PrefixSpec, *, ceiling: int | None = None) -> int:
    """Number of coset avoiders in ``S_n`` whose first entries are ``spec.prefix``.

    A prefix with a repeated entry gives 0.
    """
    require_within_ceiling(spec.n, ceiling)
    return sum(1 for _ in iter_avoiders(spec.n, parabolic_coset(spec.cls), prefix=spec.prefix))


def _box(kind: str, cls: AvoidanceClass, n: int) -> tuple[int, int]:
    a, b = cls.a, cls.b(n)
    if kind == "A":
        return a + 1, b
    if kind == "B":
        return a + 1, b + 1
    if kind == "C":
        return a, b
    raise ValueError(f"unknown sum kind {kind!r}; expected A, B or C")


@lru_cache(maxsize=256)
def _avoiders(cls: AvoidanceClass, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(avoider_words(n, parabolic_coset(cls)))


def box_sums(cls: AvoidanceClass, n: int, *, ceiling: int | None = None) -> dict[str, list[int]]:
    """``{"A": [A(n,0..l)], "B": [...], "C": [...]}`` from one pass over ``S_n(T)``.

    Summing ``g_n`` over a box of prefixes counts each avoider once if its
    first ``d`` entries all lie in the box, and prefixes with repeats
    contribute nothing.  Entries of a box outside ``1..n`` have no avoiders.
    """
    if cls.a > cls.m:
        raise ValueError(
            f"box sums need a <= m (got a={cls.a}, m={cls.m}); use the mirror class {cls.mirror()}"
        )
    require_within_ceiling(n, ceiling)
    out = {}
    words = _avoiders(cls, n)
    for kind in "ABC":
        lo, hi = _box(kind, cls, n)
        lo, hi = max(lo, 1), min(hi, n)
        counts = [0] * (cls.l + 1)
        for w in words:
            d = 0
            while d < cls.l and d < n and lo <= w[d] <= hi:
                d += 1
            counts[d] += 1
        # the depth-d sum counts words whose first d entries are all in the box
        for d in range(cls.l - 1, -1, -1):
            counts[d] += counts[d + 1]
        out[kind] = counts
    return out


def sum_oracle(kind: str, cls: AvoidanceClass, n: int, d: int, *, ceiling: int | None = None) -> int:
    if not 0 <= d <= cls.l:
        raise ValueError(f"need 0 <= d <= l={cls.l}, got d={d}")
    if kind not in ("A", "B", "C"):
        raise ValueError(f"unknown sum kind {kind!r}; expected A, B or C")
    return box_sums(cls, n, ceiling=ceiling)[kind][d]


@dataclass(frozen=True)
class SumTable:
    kind: str
    cls: AvoidanceClass
    values: Mapping[tuple[int, int], int]

    def __getitem__(self, nd: tuple[int, int]) -> int:
        return self.values[nd]


def sum_table(kind: str, cls: AvoidanceClass, ns: Sequence[int], *, f_values=None) -> SumTable:
    """Table of ``A``/``B``/``C`` (brute force) or ``D`` (alternating sum) over ``ns x 0..l``.

    ``D`` needs ``f_values``; by default they come from :func:`f_sequence`.
    """
    values: dict[tuple[int, int], int] = {}
    if kind == "D":
        if f_values is None:
            f_values = f_sequence(cls.l, cls.m, max(ns))
        for n in ns:
            for d in range(cls.l + 1):
                values[n, d] = theorem25_formula(cls, n, d, f_values)
    else:
        for n in ns:
            row = box_sums(cls, n)[kind]
            for d, v in enumerate(row):
                values[n, d] = v
    return SumTable(kind, cls, values)


def theorem25_formula(cls: AvoidanceClass, n: int, d: int, f_values) -> int:
    """``D(n,d) = sum_{j=0}^{d} (-1)^j j! C(m,j) C(d,j) f(n-j)``.

    ``f_values`` maps ``n`` to ``f(n)``; a full list indexed from 0 works.
    """
    total = 0
    for j in range(d + 1):
        idx = n - j
        try:
            if idx < 0:
                raise KeyError(idx)
            fv = f_values[idx]
        except (KeyError, IndexError):
            raise ValueError(f"f({idx}) is needed but not supplied") from None
        total += (-1) ** j * factorial(j) * binomial(cls.m, j) * binomial(d, j) * fv
    return total


def boundary_A(l: int, m: int, d: int) -> int:  # noqa: E741
    """Closed form of ``A(k, d)``: ``d! C(l,d) (k-d)! - l! m!``."""
    return factorial(d) * binomial(l, d) * factorial(l + m - d) - factorial(l) * factorial(m)


# -- verifiers ----------------------------------------------------------------


def verify_lemma22(cls: AvoidanceClass, n: int, *, ceiling: int | None = None) -> Check:
    """Check the three prefix facts on every relevant prefix of ``S_n``.

    (i) a repeated prefix entry gives 0; (ii) a length-``l`` prefix inside
    ``[a+1, b]`` gives 0; (iii) one entry ``i_r`` outside ``[a+1, b]`` among
    ``d <= l`` entries that are otherwise inside can be deleted.  The other
    entries are decremented when ``i_r <= a`` and left alone when ``i_r > b``.
    """
    from itertools import product

    if cls.a > cls.m:
        raise ValueError("prefix reductions need a <= m; use the mirror class")
    if n < cls.k:
        raise ValueError(f"need n >= k={cls.k}")
    require_within_ceiling(n, ceiling)
    a, b, l = cls.a, cls.b(n), cls.l  # noqa: E741
    failures = []
    cases = 0

    def g(nn, pre):
        return g_oracle(PrefixSpec(nn, tuple(pre), cls), ceiling=ceiling)

    # (i)
    for d in (2, 3):
        for pre in product(range(1, n + 1), repeat=min(d, n)):
            if len(set(pre)) < len(pre):
                cases += 1
                if g(n, pre) != 0:
                    failures.append(("i", pre))
    # (ii)
    for pre in product(range(a + 1, b + 1), repeat=l):
        cases += 1
        if g(n, pre) != 0:
            failures.append(("ii", pre))
    # (iii)
    inside = range(a + 1, b + 1)
    outside = [i for i in range(1, n + 1) if i <= a or i > b]
    for d in range(1, l + 1):
        for r in range(d):
            for rest in product(inside, repeat=d - 1):
                for ir in outside:
                    pre = rest[:r] + (ir,) + rest[r:]
                    if ir <= a:
                        reduced = tuple(x - 1 for x in rest)
                    else:
                        reduced = rest
                    cases += 1
                    if g(n, pre) != g(n - 1, reduced):
                        failures.append(("iii", pre))
    return Check(
        "lemma22",
        {"l": cls.l, "m": cls.m, "a": cls.a, "n": n},
        len(failures),
        0,
        not failures,
        {"cases": cases, "failures": failures[:10]},
    )


def verify_theorem23(cls: AvoidanceClass, n: int, d: int, *, ceiling: int | None = None) -> Check:
    """``A(n,d+1) == A(n,d) - (m-d) A(n-1,d) - d A(n-1,d-1)`` on brute-force values."""
    if not (n >= cls.k + 1 and 1 <= d <= cls.l - 1):
        raise ValueError(f"need n >= k+1 and 1 <= d <= l-1, got n={n}, d={d}")
    A = box_sums(cls, n, ceiling=ceiling)["A"]
    A1 = box_sums(cls, n - 1, ceiling=ceiling)["A"]
    lhs = A[d + 1]
    rhs = A[d] - (cls.m - d) * A1[d] - d * A1[d - 1]
    return check_equal("theorem23", {"l": cls.l, "m": cls.m, "a": cls.a, "n": n, "d": d}, lhs, rhs)


def verify_lemma24(cls: AvoidanceClass, n: int, d: int, *, ceiling: int | None = None) -> Check:
    """The three identities linking ``A``, ``B`` and ``C`` at ``(n, d)``."""
    if not (n >= cls.k and 1 <= d <= cls.l):
        raise ValueError(f"need n >= k and 1 <= d <= l, got n={n}, d={d}")
    m, a = cls.m, cls.a
    cur = box_sums(cls, n, ceiling=ceiling)
    prev = box_sums(cls, n - 1, ceiling=ceiling)
    A, B, C = cur["A"], cur["B"], cur["C"]
    B1, C1 = prev["B"], prev["C"]
    sides = [
        (A[d], A[d - 1] - (m - a) * B1[d - 1] - a * C1[d - 1]),
        ((m - a) * A[d], (m - a) * B[d] - (m - a) * d * B1[d - 1]),
        (a * A[d], a * C[d] - a * d * C1[d - 1]),
    ]
    return Check(
        "lemma24",
        {"l": cls.l, "m": m, "a": a, "n": n, "d": d},
        [s[0] for s in sides],
        [s[1] for s in sides],
        all(x == y for x, y in sides),
    )


def verify_theorem25(cls: AvoidanceClass, n: int, *, ceiling: int | None = None) -> Check:
    """Brute-force ``A(n, d)`` against the alternating sum, for every ``d in 0..l``.

    The ``f`` values fed to the alternating sum are brute-force counts too.
    """
    if n < cls.k:
        raise ValueError(f"need n >= k={cls.k}")
    A = box_sums(cls, n, ceiling=ceiling)["A"]
    T = parabolic_coset(cls)
    f = {j: enumerate_avoiders(j, T) for j in range(max(0, n - cls.l), n + 1)}
    D = [theorem25_formula(cls, n, d, f) for d in range(cls.l + 1)]
    return check_equal("theorem25", {"l": cls.l, "m": cls.m, "a": cls.a, "n": n}, A, D)


def verify_boundary_A(cls: AvoidanceClass, d: int, *, ceiling: int | None = None) -> Check:
    A = box_sums(cls, cls.k, ceiling=ceiling)["A"]
    return check_equal(
        "boundary_A", {"l": cls.l, "m": cls.m, "a": cls.a, "d": d}, A[d], boundary_A(cls.l, cls.m, d)
    )


def reduction_identity_sides(l: int, m: int, d: int) -> tuple[int, int]:  # noqa: E741
    """Both sides of ``sum_j (-1)^j j! C(m,j) C(d,j) (k-j)! = d! C(l,d) (k-d)!``."""
    k = l + m
    lhs = sum((-1) ** j * factorial(j) * binomial(m, j) * binomial(d, j) * factorial(k - j) for j in range(d + 1))
    return lhs, factorial(d) * binomial(l, d) * factorial(k - d)


def verify_reduction_identity(l: int, m: int, d: int) -> Check:  # noqa: E741
    lhs, rhs = reduction_identity_sides(l, m, d)
    return check_equal("reduction_identity", {"l": l, "m": m, "d": d}, lhs, rhs)


# -- the hypergeometric sum M(s, t) -------------------------------------------


def _check_M_args(s: int, t: int, n: int) -> None:
    if not 1 <= s <= t:
        raise ValueError(f"need 1 <= s <= t, got s={s}, t={t}")
    if n < s:
        raise ValueError(f"need n >= s (C(n,i) vanishes otherwise), got n={n}, s={s}")


def M_direct(s: int, t: int, n: int) -> Fraction:
    """``sum_{i=0}^{s} (-1)^i C(s,i) C(t,i) / C(n,i)``, summed exactly."""
    _check_M_args(s, t, n)
    return sum(
        (Fraction((-1) ** i * binomial(s, i) * binomial(t, i), binomial(n, i)) for i in range(s + 1)),
        Fraction(0),
    )


def M_closed(s: int, t: int, n: int) -> Fraction:
    _check_M_args(s, t, n)
    if n >= s + t:
        return Fraction(binomial(n - t, s), binomial(n, s))
    if n >= t:
        return Fraction(0)
    return Fraction((-1) ** s * binomial(s + t - n - 1, s), binomial(n, s))
