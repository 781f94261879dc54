"""Builders for the named q-series: Pochhammer products, Ramanujan theta
functions, overpartition generating functions and the Gordon-type multisums.

All builders take a target precision ``N`` and return series known exactly
through ``q**N``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .series import LaurentSeries, TruncatedSeries, one

__all__ = [
    "GordonParams",
    "pochhammer",
    "pochhammer_finite",
    "theta_f",
    "theta_exponents",
    "euler_f",
    "overpartition_gf",
    "s_gf",
    "singular_gf",
    "bressoud_product",
    "bressoud_multisum",
    "rrg_overpartition_product",
    "rrg_overpartition_multisum",
    "split_modulus",
]


@dataclass(frozen=True)
class GordonParams:
    """Parameters ``(k, i, j)`` with ``j in {0, 1}`` and ``0 < i < (2k+j)/2``."""

    k: int
    i: int
    j: int

    def __post_init__(self):
        if self.j not in (0, 1):
            raise ValueError(f"j must be 0 or 1, got {self.j}")
        if self.k < 2:
            raise ValueError(f"k must be at least 2, got {self.k}")
        if not 0 < 2 * self.i < 2 * self.k + self.j:
            raise ValueError(
                f"need 0 < i < (2k+j)/2, got k={self.k}, i={self.i}, j={self.j}")

    @classmethod
    def grid(cls, k_values, j_values=(0, 1)):
        """All valid parameter triples for the given k and j values."""
        out = []
        for k in k_values:
            for j in j_values:
                for i in range(1, k + 1):
                    if 2 * i < 2 * k + j:
                        out.append(cls(k, i, j))
        return out

    @property
    def overpartition_modulus(self) -> int:
        """The modulus ``2k - 1 + j`` of the overpartition residue side."""
        return 2 * self.k - 1 + self.j


def split_modulus(K: int) -> tuple[int, int]:
    """Invert ``K = 2k - 1 + j``: even K gives ``j = 1``, odd K gives ``j = 0``."""
    if K % 2 == 0:
        return K // 2, 1
    return (K + 1) // 2, 0


def _mul_binomial(c: list, e: int, sign: int) -> None:
    """In place: ``c *= (1 + sign*q**e)`` truncated to ``len(c)``."""
    for n in range(len(c) - 1, e - 1, -1):
        c[n] += sign * c[n - e]


def _div_binomial(c: list, e: int, sign: int) -> None:
    """In place: ``c /= (1 + sign*q**e)`` for ``e >= 1``."""
    for n in range(e, len(c)):
        c[n] -= sign * c[n - e]


def pochhammer(a: int, b: int, N: int, negated: bool = False):
    """``(q^a; q^b)_inf`` through ``q**N``, or ``(-q^a; q^b)_inf`` when
    ``negated``.

    For ``a >= 1`` the result is a :class:`TruncatedSeries`. Nonpositive ``a``
    is accepted and yields a :class:`LaurentSeries` (the finitely many factors
    with nonpositive exponent are multiplied out exactly).
    """
    if b < 1:
        raise ValueError("step b must be positive")
    sign = 1 if negated else -1
    if a >= 1:
        c = [1] + [0] * N
        e = a
        while e <= N:
            _mul_binomial(c, e, sign)
            e += b
        return TruncatedSeries._raw(c, N)
    # factors (1 +- q^e) with e <= 0 form a Laurent polynomial
    poly = {0: 1}
    e = a
    while e <= 0:
        nxt: dict[int, int] = {}
        for x, c in poly.items():
            nxt[x] = nxt.get(x, 0) + c
            nxt[x + e] = nxt.get(x + e, 0) + sign * c
        poly = {x: c for x, c in nxt.items() if c}
        e += b
    lo = min(poly, default=0)
    if not poly:
        return LaurentSeries({}, N, 0)
    head = LaurentSeries(poly, N, lo)
    tail = pochhammer(e, b, N - lo, negated)
    return head * tail


def pochhammer_finite(a: int, b: int, n: int, N: int,
                      negated: bool = False) -> TruncatedSeries:
    """The finite product ``prod_{m<n} (1 -+ q^(a+m*b))`` through ``q**N``."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    sign = 1 if negated else -1
    c = [1] + [0] * N
    for m in range(n):
        e = a + m * b
        if e > N:
            break
        _mul_binomial(c, e, sign)
    return TruncatedSeries._raw(c, N)


def theta_exponents(r: int, s: int, N: int):
    """Yield ``(n, exponent)`` for every index n of the bilateral theta sum
    ``f(q^r, q^s)`` whose exponent ``r*n(n+1)/2 + s*n(n-1)/2`` is ``<= N``."""
    if r + s <= 0:
        raise ValueError(f"theta sum does not truncate: r + s = {r + s} <= 0")

    def expo(n):
        return (r * n * (n + 1) + s * n * (n - 1)) // 2

    # exponent is a convex quadratic in n with vertex at (s - r) / (2(r + s))
    center = (s - r) // (2 * (r + s))
    for start, step in ((center, 1), (center - 1, -1)):
        n = start
        while True:
            e = expo(n)
            if e > N and (n - center) * step > 1:
                break
            if e <= N:
                yield n, e
            n += step


def theta_f(sign_a: int, r: int, sign_b: int, s: int, N: int) -> LaurentSeries:
    """Ramanujan's ``f(a, b)`` with ``a = sign_a*q^r`` and ``b = sign_b*q^s``.

    Sums every ``n`` with exponent ``<= N``. The result is Laurent because
    ``r`` or ``s`` may be negative.
    """
    if sign_a not in (1, -1) or sign_b not in (1, -1):
        raise ValueError("signs must be +1 or -1")
    terms: dict[int, int] = {}
    for n, e in theta_exponents(r, s, N):
        sign = 1
        if sign_a < 0 and (n * (n + 1) // 2) % 2:
            sign = -sign
        if sign_b < 0 and (n * (n - 1) // 2) % 2:
            sign = -sign
        terms[e] = terms.get(e, 0) + sign
    lo = min(0, min(terms, default=0))
    return LaurentSeries(terms, N, lo)


def euler_f(n: int, N: int) -> TruncatedSeries:
    """``f_n = f(-q^n) = (q^n; q^n)_inf``."""
    return pochhammer(n, n, N)


@lru_cache(maxsize=16)
def overpartition_gf(N: int) -> TruncatedSeries:
    """``f_2 / f_1^2``, whose ``q**n`` coefficient is the number of
    overpartitions of n."""
    f1 = euler_f(1, N)
    return euler_f(2, N) / f1 / f1


def _check_s_params(k: int, i: int) -> None:
    if not 1 <= i or not 2 * i <= k:
        raise ValueError(f"need 1 <= i <= k/2, got k={k}, i={i}")


def s_gf(k: int, i: int, N: int) -> TruncatedSeries:
    """Generating function of ``S_{k,i}(n)``:
    ``f(-q^i, -q^(k-i)) * f_2 / f_1^2``."""
    _check_s_params(k, i)
    theta = theta_f(-1, i, -1, k - i, N).to_truncated()
    return theta * overpartition_gf(N)


def _apply_factors(parts: list[tuple[int, int, bool]], N: int) -> TruncatedSeries:
    """``prod (-+q^a; q^b)_inf`` built factor by factor in one buffer."""
    c = [1] + [0] * N
    for a, b, neg in parts:
        sign = 1 if neg else -1
        for e in range(a, N + 1, b):
            _mul_binomial(c, e, sign)
    return TruncatedSeries._raw(c, N)


def singular_gf(k: int, i: int, N: int) -> TruncatedSeries:
    """``(q^k, -q^i, -q^(k-i); q^k)_inf / (q; q)_inf``, the generating
    function of the singular overpartitions counted by ``Qbar_{k,i}``."""
    if not 0 < i < k:
        raise ValueError(f"need 0 < i < k, got k={k}, i={i}")
    return _product_over_euler([(k, k, False), (i, k, True),
                                (k - i, k, True)], N)


def _product_over_euler(parts: list[tuple[int, int, bool]], N: int):
    return _apply_factors(parts, N) / euler_f(1, N)


def bressoud_product(p: GordonParams, N: int) -> TruncatedSeries:
    """``(q^i, q^(M-i), q^M; q^M)_inf / (q)_inf`` with ``M = 2k + j``."""
    M = 2 * p.k + p.j
    return _product_over_euler([(p.i, M, False), (M - p.i, M, False),
                                (M, M, False)], N)


def rrg_overpartition_product(p: GordonParams, N: int) -> TruncatedSeries:
    """``(-q)_inf (q^i, q^(M-i), q^M; q^M)_inf / (q)_inf`` with
    ``M = 2k - 1 + j``."""
    M = p.overpartition_modulus
    return _product_over_euler([(1, 1, True), (p.i, M, False),
                                (M - p.i, M, False), (M, M, False)], N)


def _index_tuples(depth: int, top_bound: int):
    """All ``N_1 >= N_2 >= ... >= N_depth >= 0`` with ``N_1 <= top_bound``."""
    if depth == 0:
        yield ()
        return
    for combo in itertools.combinations_with_replacement(
            range(top_bound, -1, -1), depth):
        yield combo


class _InverseTable:
    """Cache of ``1 / prod_{m<n}(1 - q^(a+m*b))`` at a fixed precision."""

    def __init__(self, a: int, b: int, N: int):
        self._a, self._b, self._N = a, b, N
        self._table = [one(N)]

    def __getitem__(self, n: int) -> TruncatedSeries:
        while len(self._table) <= n:
            m = len(self._table) - 1
            c = list(self._table[-1].coefficients())
            e = self._a + m * self._b
            if e <= self._N:
                _div_binomial(c, e, -1)
            self._table.append(TruncatedSeries._raw(c, self._N))
        return self._table[n]


def _multisum_term(exponent: int, factors, N: int):
    if exponent > N:
        return None
    rest = N - exponent
    acc = one(rest)
    for f in factors:
        acc = acc * f.truncate(rest)
    return acc.shift(exponent)


def bressoud_multisum(p: GordonParams, N: int,
                      linear_from: int | None = None) -> TruncatedSeries:
    """Finite (k-1)-fold sum side of Bressoud's analytic identity.

    Sums ``q^(N_1^2+...+N_{k-1}^2 + N_i+...+N_{k-1})`` over
    ``(q)_{N_1-N_2}...(q)_{N_{k-2}-N_{k-1}} (q^(2-j); q^(2-j))_{N_{k-1}}``;
    the exponent is at least ``N_1^2`` so ``N_1 <= isqrt(N)`` suffices.

    ``linear_from`` moves the start of the linear part (default ``i``); only
    the default matches the product side.
    """
    k, i, j = p.k, p.i, p.j
    start = i if linear_from is None else linear_from
    inv_q = _InverseTable(1, 1, N)
    inv_last = _InverseTable(2 - j, 2 - j, N)
    total = one(N).scale(0).to_laurent()
    for idx in _index_tuples(k - 1, isqrt(N)):
        expo = sum(x * x for x in idx) + sum(idx[start - 1:])
        factors = [inv_q[idx[t] - idx[t + 1]] for t in range(k - 2)]
        factors.append(inv_last[idx[-1]])
        term = _multisum_term(expo, factors, N)
        if term is not None:
            total = total + term
    return total.to_truncated()


def rrg_overpartition_multisum(p: GordonParams, N: int) -> TruncatedSeries:
    """Finite (k-1)-fold sum side of the overpartition Andrews-Gordon identity.

    The summand is
    ``q^(N_1(N_1+1)/2 + N_2^2+...+N_{k-1}^2 + N_{i+1}+...+N_{k-1})
    (-q)_{N_1-1} (1 + q^(N_i))`` over the same denominators as
    :func:`bressoud_multisum`. Conventions: the all-zero summand is 1, and
    ``N_k = 0`` when ``i = k``.
    """
    k, i, j = p.k, p.i, p.j
    inv_q = _InverseTable(1, 1, N)
    inv_last = _InverseTable(2 - j, 2 - j, N)
    bound = 0
    while (bound + 1) * (bound + 2) // 2 <= N:
        bound += 1
    total = one(N).scale(0).to_laurent()
    for idx in _index_tuples(k - 1, bound):
        n1 = idx[0]
        if n1 == 0:
            total = total + 1
            continue
        expo = n1 * (n1 + 1) // 2 + sum(x * x for x in idx[1:]) + sum(idx[i:])
        if expo > N:
            continue
        rest = N - expo
        ni = idx[i - 1] if i <= k - 1 else 0
        # (-q)_{N_1 - 1} * (1 + q^{N_i})
        c = [1] + [0] * rest
        for m in range(1, n1):
            if m > rest:
                break
            _mul_binomial(c, m, 1)
        if ni == 0:
            c = [2 * v for v in c]
        elif ni <= rest:
            _mul_binomial(c, ni, 1)
        factors = [TruncatedSeries._raw(c, rest)]
        factors += [inv_q[idx[t] - idx[t + 1]] for t in range(k - 2)]
        factors.append(inv_last[idx[-1]])
        total = total + _multisum_term(expo, factors, N)
    return total.to_truncated()

