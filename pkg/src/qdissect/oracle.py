"""Brute-force enumeration of partitions and overpartitions.

This is the independent ground truth for generating-function coefficients:
nothing here touches the series code. Enumeration is exhaustive and meant for
desk-scale ``n`` (``n <= 30``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from .products import GordonParams, split_modulus

__all__ = [
    "DESK_SCALE",
    "Overpartition",
    "FrequencyProfile",
    "iter_partitions",
    "iter_overpartitions",
    "count_overpartitions",
    "count_overpartitions_memo",
    "count_A_bar",
    "count_B_bar",
    "count_A",
    "count_B",
    "s_count",
    "is_A_bar",
    "is_B_bar",
    "is_A",
    "is_B",
]

DESK_SCALE = 30


@dataclass(frozen=True)
class Overpartition:
    """Parts as ``(value, multiplicity, overlined)`` in decreasing value order.

    ``overlined`` marks that the first occurrence of ``value`` carries the
    overline, so the overlined count of each value is 0 or 1 by construction.
    """

    parts: tuple[tuple[int, int, bool], ...]

    @property
    def weight(self) -> int:
        return sum(v * m for v, m, _ in self.parts)

    def profile(self) -> "FrequencyProfile":
        plain = {}
        bar = {}
        for v, m, o in self.parts:
            plain[v] = m - int(o)
            bar[v] = int(o)
        return FrequencyProfile(plain, bar)

    def __str__(self) -> str:
        out = []
        for v, m, o in self.parts:
            if o:
                out.append(f"[{v}]")
                m -= 1
            out.extend([str(v)] * m)
        return " + ".join(out) or "0"


class FrequencyProfile:
    """Non-overlined counts ``f_l``, overlined counts ``fbar_l`` and the
    cumulative overline count ``V(l)``."""

    def __init__(self, plain: dict[int, int], bar: dict[int, int]):
        self._plain = plain
        self._bar = bar

    def f(self, l: int) -> int:
        return self._plain.get(l, 0)

    def fbar(self, l: int) -> int:
        return self._bar.get(l, 0)

    def V(self, l: int) -> int:
        return sum(c for v, c in self._bar.items() if v <= l)

    @property
    def largest(self) -> int:
        return max(list(self._plain) + list(self._bar), default=0)


def iter_partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Ordinary partitions of n as nonincreasing tuples."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in iter_partitions(n - first, first):
            yield (first,) + rest


def iter_overpartitions(n: int) -> Iterator[Overpartition]:
    """Every overpartition of n.

    Recursive descent over part values from largest to smallest, branching on
    multiplicity and on whether the first copy is overlined.
    """

    def rec(remaining: int, top: int):
        if remaining == 0:
            yield ()
            return
        if top == 0:
            return
        yield from rec(remaining, top - 1)
        for mult in range(1, remaining // top + 1):
            for tail in rec(remaining - mult * top, top - 1):
                yield ((top, mult, False),) + tail
                yield ((top, mult, True),) + tail

    for parts in rec(n, n):
        yield Overpartition(parts)


def count_overpartitions(n: int) -> int:
    """Number of overpartitions of n, by exhaustive enumeration."""
    return sum(1 for _ in iter_overpartitions(n))


@lru_cache(maxsize=None)
def _count_memo(n: int, top: int) -> int:
    if n == 0:
        return 1
    if top == 0:
        return 0
    total = _count_memo(n, top - 1)
    for mult in range(1, n // top + 1):
        total += 2 * _count_memo(n - mult * top, top - 1)
    return total


def count_overpartitions_memo(n: int) -> int:
    """Same count via the memoized recursion (no restrictions, so caching the
    ``(remaining, largest allowed part)`` state is sound)."""
    return _count_memo(n, n)


# -- membership predicates ------------------------------------------------


def is_A_bar(op: Overpartition, p: GordonParams) -> bool:
    """Residue side of the overpartition Gordon theorem.

    For ``i = k, j = 1`` no part (overlined or not) may be divisible by k;
    otherwise non-overlined parts avoid ``0, +-i`` modulo ``2k - 1 + j``.
    """
    if p.i == p.k and p.j == 1:
        return all(v % p.k for v, _, _ in op.parts)
    M = p.overpartition_modulus
    banned = {0, p.i % M, (-p.i) % M}
    for v, m, o in op.parts:
        if m - int(o) > 0 and v % M in banned:
            return False
    return True


def is_B_bar(op: Overpartition, p: GordonParams) -> bool:
    """Frequency side of the overpartition Gordon theorem.

    (i) ``f_1 <= i - 1``; (ii) ``f_l + fbar_l + f_{l+1} <= k - 1`` for all l;
    (iii) where (ii) is tight,
    ``l*f_l + l*fbar_l + (l+1)*f_{l+1} == V(l) + i - 1  (mod 2 - j)``.
    """
    k, i, j = p.k, p.i, p.j
    prof = op.profile()
    if prof.f(1) > i - 1:
        return False
    for l in range(1, prof.largest + 1):
        total = prof.f(l) + prof.fbar(l) + prof.f(l + 1)
        if total > k - 1:
            return False
        if total == k - 1 and j == 0:
            lhs = l * prof.f(l) + l * prof.fbar(l) + (l + 1) * prof.f(l + 1)
            if (lhs - prof.V(l) - (i - 1)) % 2:
                return False
    return True


def is_A(parts: tuple[int, ...], p: GordonParams) -> bool:
    """No part congruent to ``0, +-i`` modulo ``2k + j``."""
    M = 2 * p.k + p.j
    banned = {0, p.i % M, (-p.i) % M}
    return all(v % M not in banned for v in parts)


def is_B(parts: tuple[int, ...], p: GordonParams) -> bool:
    """Bressoud's frequency conditions on an ordinary partition."""
    k, i, j = p.k, p.i, p.j
    freq: dict[int, int] = {}
    for v in parts:
        freq[v] = freq.get(v, 0) + 1
    if freq.get(1, 0) > i - 1:
        return False
    for l in range(1, max(freq, default=0) + 1):
        fl, fn = freq.get(l, 0), freq.get(l + 1, 0)
        if fl + fn > k - 1:
            return False
        if fl + fn == k - 1 and j == 0 and (l * fl + (l + 1) * fn - (i - 1)) % 2:
            return False
    return True


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")


def _count(items, pred: Callable) -> int:
    return sum(1 for x in items if pred(x))


def count_A_bar(p: GordonParams, n: int) -> int:
    _check_n(n)
    return _count(iter_overpartitions(n), lambda op: is_A_bar(op, p))


def count_B_bar(p: GordonParams, n: int) -> int:
    _check_n(n)
    return _count(iter_overpartitions(n), lambda op: is_B_bar(op, p))


def count_A(p: GordonParams, n: int) -> int:
    _check_n(n)
    return _count(iter_partitions(n), lambda lam: is_A(lam, p))


def count_B(p: GordonParams, n: int) -> int:
    _check_n(n)
    return _count(iter_partitions(n), lambda lam: is_B(lam, p))


def s_count(K: int, i: int, n: int) -> int:
    """``S_{K,i}(n)`` by enumeration, via ``S_{2k-1+j,i} = Abar_{k,i,j}``."""
    if not (1 <= i and 2 * i <= K):
        raise ValueError(f"need 1 <= i <= K/2, got K={K}, i={i}")
    k, j = split_modulus(K)
    if k < 2:
        # K = 2: (k, i, j) = (1, 1, 1), "no part divisible by 1"
        _check_n(n)
        return int(n == 0)
    return count_A_bar(GordonParams(k, i, j), n)
