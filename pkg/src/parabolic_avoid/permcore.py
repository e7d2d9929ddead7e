"""Permutations, pattern sets, and avoidance.

Permutations are in one-line notation over ``1..n``.  Composition is
``(p * q)(i) == p(q(i))``: apply ``q`` first.  Under this convention the left
coset ``sigma^a P_{l,m}`` consists of the patterns whose first ``l`` entries
are ``a+1, ..., a+l`` (taken cyclically mod ``k``) in some order.

Two enumeration routes are provided and are checked against each other:

* :func:`iter_avoiders` walks actual values depth-first and yields avoiders
  in lexicographic order.  It also accepts a fixed prefix.
* :func:`enumerate_avoiders` counts by growing standardized avoiders one
  entry at a time.  Deleting the last entry of an avoider leaves an avoider,
  so only extensions of avoiders ever need checking.

Both prune by computing, once per node, the set of next entries that would
complete an occurrence.  ``prune=False`` falls back to filtering all of
``S_n`` and exists to guard the pruning.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial
from typing import Iterable, Iterator, Sequence

__all__ = [
    "AvoidanceClass",
    "PatternSet",
    "Permutation",
    "avoider_words",
    "avoids_all",
    "brute_force_ceiling",
    "complement",
    "count_by_first_entry",
    "enumerate_avoiders",
    "identity",
    "is_order_isomorphic",
    "iter_avoiders",
    "occurs",
    "parabolic_coset",
    "parabolic_subgroup",
    "reversal",
    "sigma",
    "simple_transposition",
    "standardize",
    "subgroup_closure",
]


@dataclass(frozen=True, slots=True)
class Permutation:
    word: tuple[int, ...]

    def __init__(self, word: Iterable[int] = ()):
        word = tuple(int(x) for x in word)
        if sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Accept ``"2143"``, ``"2 1 4 3"`` or ``"2,1,4,3"``."""
        text = text.strip()
        if any(sep in text for sep in " ,"):
            return cls(int(t) for t in text.replace(",", " ").split())
        return cls(int(ch) for ch in text)

    @property
    def n(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __iter__(self) -> Iterator[int]:
        return iter(self.word)

    def __getitem__(self, i):
        return self.word[i]

    def __call__(self, i: int) -> int:
        """Image of ``i`` (1-based)."""
        return self.word[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different lengths")
        w = self.word
        return Permutation(w[j - 1] for j in other.word)

    def __pow__(self, e: int) -> Permutation:
        if e < 0:
            return self.inverse() ** (-e)
        out = identity(self.n)
        for _ in range(e):
            out = self * out
        return out

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, v in enumerate(self.word, 1):
            inv[v - 1] = i
        return Permutation(inv)

    def __str__(self) -> str:
        if self.n < 10:
            return "".join(map(str, self.word))
        return " ".join(map(str, self.word))

    def __repr__(self) -> str:
        return f"Permutation({self.word})"

    def __lt__(self, other: Permutation) -> bool:
        return self.word < other.word


def identity(n: int) -> Permutation:
    return Permutation(range(1, n + 1))


def simple_transposition(i: int, k: int) -> Permutation:
    """``s_i`` in ``S_k``: swaps ``i`` and ``i+1``."""
    if not 1 <= i < k:
        raise ValueError(f"s_{i} does not exist in S_{k}")
    w = list(range(1, k + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return Permutation(w)


def sigma(k: int) -> Permutation:
    """The long cycle ``(2, 3, ..., k, 1)`` = ``s_1 s_2 ... s_{k-1}``."""
    if k < 1:
        raise ValueError("k must be positive")
    return Permutation(list(range(2, k + 1)) + [1])


def standardize(seq: Sequence[int]) -> tuple[int, ...]:
    """Replace each entry by its rank, giving the permutation order-isomorphic to ``seq``."""
    rank = {v: i for i, v in enumerate(sorted(seq), 1)}
    return tuple(rank[v] for v in seq)


def is_order_isomorphic(alpha: Sequence[int], beta: Sequence[int]) -> bool:
    if len(alpha) != len(beta):
        raise ValueError(f"length mismatch: {len(alpha)} vs {len(beta)}")
    m = len(alpha)
    return all(
        (alpha[i] < alpha[j]) == (beta[i] < beta[j]) for i in range(m) for j in range(i + 1, m)
    )


def reversal(pi: Permutation) -> Permutation:
    return Permutation(pi.word[::-1])


def complement(pi: Permutation) -> Permutation:
    n = pi.n
    return Permutation(n + 1 - v for v in pi.word)


@dataclass(frozen=True, slots=True)
class PatternSet:
    """A finite set of forbidden patterns, all in ``S_k``."""

    k: int
    patterns: frozenset[Permutation]

    def __init__(self, patterns: Iterable[Permutation | Sequence[int]], k: int | None = None):
        pats = frozenset(p if isinstance(p, Permutation) else Permutation(p) for p in patterns)
        lengths = {p.n for p in pats}
        if k is None:
            if len(lengths) != 1:
                raise ValueError("pattern set must be non-empty with a common length (or give k)")
            (k,) = lengths
        if lengths - {k}:
            raise ValueError(f"all patterns must have length {k}, got lengths {sorted(lengths)}")
        if k < 1:
            raise ValueError("pattern length must be at least 1")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "patterns", pats)

    def __len__(self) -> int:
        return len(self.patterns)

    def __iter__(self) -> Iterator[Permutation]:
        return iter(sorted(self.patterns))

    def __contains__(self, p) -> bool:
        if not isinstance(p, Permutation):
            p = Permutation(p)
        return p in self.patterns

    def words(self) -> frozenset[tuple[int, ...]]:
        return frozenset(p.word for p in self.patterns)

    def map(self, f) -> PatternSet:
        return PatternSet((f(p) for p in self.patterns), k=self.k)

    def __repr__(self) -> str:
        return f"PatternSet(k={self.k}, {{{', '.join(str(p) for p in self)}}})"


def subgroup_closure(generators: Iterable[Permutation], k: int | None = None) -> PatternSet:
    """Subgroup of ``S_k`` generated by ``generators``, by breadth-first closure.

    Right-multiplying by generators from the identity reaches every element of
    the generated subgroup, since the group is finite.
    """
    gens = list(generators)
    if k is None:
        if not gens:
            raise ValueError("k is required when there are no generators")
        k = gens[0].n
    if any(g.n != k for g in gens):
        raise ValueError(f"all generators must lie in S_{k}")
    e = identity(k)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return PatternSet(seen, k=k)


def parabolic_subgroup(k: int, omitted: Iterable[int]) -> PatternSet:
    """Subgroup of ``S_k`` generated by every ``s_i`` with ``i`` not in ``omitted``."""
    skip = set(omitted)
    return subgroup_closure((simple_transposition(i, k) for i in range(1, k) if i not in skip), k)


@dataclass(frozen=True, slots=True)
class AvoidanceClass:
    """Parameters of the coset ``sigma^a P_{l,m}`` inside ``S_{l+m}``."""

    l: int  # noqa: E741
    m: int
    a: int = 0

    def __post_init__(self):
        if self.l < 1 or self.m < 1:
            raise ValueError(f"need l, m >= 1, got l={self.l}, m={self.m}")
        if not 0 <= self.a <= self.k - 1:
            raise ValueError(f"need 0 <= a <= k-1 = {self.k - 1}, got a={self.a}")

    @property
    def k(self) -> int:
        return self.l + self.m

    @property
    def lam(self) -> int:
        return min(self.l, self.m)

    @property
    def mu(self) -> int:
        return max(self.l, self.m)

    def b(self, n: int) -> int:
        return n - self.m + self.a

    def mirror(self) -> AvoidanceClass:
        """The class with the same counts under reverse-complement (requires ``a >= 1``)."""
        return AvoidanceClass(self.m, self.l, self.k - self.a)

    def patterns(self) -> PatternSet:
        return parabolic_coset(self)


_COSET_CACHE: dict[AvoidanceClass, PatternSet] = {}


def parabolic_coset(cls: AvoidanceClass) -> PatternSet:
    """The left coset ``sigma^a P_{l,m} = {sigma^a * p : p in P_{l,m}}``."""
    if not isinstance(cls, AvoidanceClass):
        raise TypeError("expected an AvoidanceClass")
    cached = _COSET_CACHE.get(cls)
    if cached is None:
        sub = parabolic_subgroup(cls.k, [cls.l])
        shift = sigma(cls.k) ** cls.a
        cached = _COSET_CACHE[cls] = sub.map(lambda p: shift * p)
    return cached


def occurs(tau: Permutation, pi: Permutation) -> bool:
    k = tau.n
    if k > pi.n:
        return False
    target = tau.word
    return any(standardize(sub) == target for sub in combinations(pi.word, k))


def avoids_all(pi: Permutation, T: PatternSet) -> bool:
    if T.k > pi.n:
        return True
    words = T.words()
    return not any(standardize(sub) in words for sub in combinations(pi.word, T.k))


class _Blocker:
    """For a pattern set, finds which next entries would complete an occurrence.

    An occurrence ending at the next entry consists of ``k-1`` earlier entries
    whose pattern is some ``tau[:-1]`` (standardized), followed by a value whose
    rank among them is ``tau[-1]``.  For each matching ``(k-1)``-subsequence the
    forbidden values form one open interval between consecutive chosen values.
    """

    def __init__(self, T: PatternSet):
        self.k = T.k
        tails: dict[tuple[int, ...], set[int]] = {}
        for w in T.words():
            tails.setdefault(standardize(w[:-1]), set()).add(w[-1])
        self.tails = {key: sorted(v) for key, v in tails.items()}

    def forbidden(self, prefix: Sequence[int], top: int, *, insertion: bool = False) -> int:
        """Bitmask of next entries that would complete an occurrence.

        With ``insertion=False`` the prefix holds actual distinct values and bit
        ``v`` (``1 <= v <= top``) stands for appending the unused value ``v``;
        the blocked values lie strictly between two consecutive chosen values.
        With ``insertion=True`` the prefix is standardized and bit ``v``
        (``1 <= v <= top``) stands for appending rank ``v`` with the old
        entries ``>= v`` shifted up; the blocked ranks are ``lo+1 .. hi``.
        """
        k = self.k
        if len(prefix) < k - 1:
            return 0
        if k == 1:
            return ((1 << (top + 1)) - 1) ^ 1
        mask = 0
        tails = self.tails
        for sub in combinations(prefix, k - 1):
            ranks = tails.get(standardize(sub))
            if ranks is None:
                continue
            s = sorted(sub)
            for r in ranks:
                lo = s[r - 2] if r >= 2 else 0
                if insertion:
                    hi = s[r - 1] if r <= k - 1 else top
                    mask |= ((1 << (hi + 1)) - 1) ^ ((1 << (lo + 1)) - 1)
                else:
                    hi = s[r - 1] if r <= k - 1 else top + 1
                    mask |= ((1 << hi) - 1) ^ ((1 << (lo + 1)) - 1)
        return mask


def _permutations_filtered(n: int, T: PatternSet, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    d = len(prefix)
    for w in permutations(range(1, n + 1)):
        if tuple(w[:d]) == tuple(prefix) and avoids_all(Permutation(w), T):
            yield w


def _check_prefix(n: int, prefix: Sequence[int]) -> tuple[int, ...]:
    prefix = tuple(prefix)
    if len(prefix) > n:
        raise ValueError(f"prefix of length {len(prefix)} exceeds n={n}")
    bad = [v for v in prefix if not 1 <= v <= n]
    if bad:
        raise ValueError(f"prefix entries {bad} outside 1..{n}")
    return prefix


def iter_avoiders(
    n: int, T: PatternSet, *, prefix: Sequence[int] = (), prune: bool = True
) -> Iterator[tuple[int, ...]]:
    """Yield the words of ``S_n(T)`` that start with ``prefix``, in lexicographic order.

    A prefix with a repeated entry has no completions.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    prefix = _check_prefix(n, prefix)
    if len(set(prefix)) != len(prefix):
        return
    if not prune:
        yield from _permutations_filtered(n, T, prefix)
        return
    if T.k <= len(prefix) and not avoids_all(Permutation(standardize(prefix)), T):
        return
    blocker = _Blocker(T)
    full = (1 << (n + 1)) - 2
    word = list(prefix)
    used = 0
    for v in word:
        used |= 1 << v

    def walk(used: int) -> Iterator[tuple[int, ...]]:
        if len(word) == n:
            yield tuple(word)
            return
        allowed = full & ~used & ~blocker.forbidden(word, n)
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            word.append(low.bit_length() - 1)
            yield from walk(used | low)
            word.pop()

    yield from walk(used)


def _grow(n: int, blocker: _Blocker, word: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Standardized avoiders of length ``n`` extending ``word`` on the right."""
    d = len(word)
    if d == n:
        yield word
        return
    allowed = ((1 << (d + 2)) - 2) & ~blocker.forbidden(word, d + 1, insertion=True)
    while allowed:
        low = allowed & -allowed
        allowed ^= low
        v = low.bit_length() - 1
        # new last entry has value v; old values >= v move up by one
        yield from _grow(n, blocker, tuple(x + 1 if x >= v else x for x in word) + (v,))


def _count_grow(n: int, blocker: _Blocker, word: tuple[int, ...]) -> int:
    d = len(word)
    if d == n:
        return 1
    allowed = ((1 << (d + 2)) - 2) & ~blocker.forbidden(word, d + 1, insertion=True)
    if d == n - 1:
        return allowed.bit_count()
    total = 0
    while allowed:
        low = allowed & -allowed
        allowed ^= low
        v = low.bit_length() - 1
        total += _count_grow(n, blocker, tuple(x + 1 if x >= v else x for x in word) + (v,))
    return total


def avoider_words(n: int, T: PatternSet) -> list[tuple[int, ...]]:
    """All of ``S_n(T)`` as sorted words, built by right extension."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return sorted(_grow(n, _Blocker(T), ()))


def enumerate_avoiders(n: int, T: PatternSet, *, prune: bool = True) -> int:
    """``|S_n(T)|``.  ``n = 0`` gives 1 (the empty permutation avoids everything)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if not prune:
        return sum(1 for _ in _permutations_filtered(n, T))
    if n < T.k:
        return factorial(n)
    return _count_grow(n, _Blocker(T), ())


def count_by_first_entry(n: int, T: PatternSet) -> dict[int, int]:
    """Counts of ``S_n(T)`` split by first entry.

    The parts are independent and sum to :func:`enumerate_avoiders`; callers
    may farm them out to workers.
    """
    return {v: sum(1 for _ in iter_avoiders(n, T, prefix=(v,))) for v in range(1, n + 1)}


def brute_force_ceiling(override: int | None = None) -> int:
    """Largest ``n`` the brute-force oracles accept.

    Resolution order: explicit ``override``, then ``PARABOLIC_AVOID_BF_CEILING``,
    then 12.
    """
    if override is not None:
        return override
    env = os.environ.get("PARABOLIC_AVOID_BF_CEILING")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"PARABOLIC_AVOID_BF_CEILING must be an integer, got {env!r}") from None
    return 12
