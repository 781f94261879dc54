"""Congruences ``S_{K,i}(dn + a) = 0 (mod m)``: the published families as
data, a checker, and a scanner for further candidates.

Everything here is empirical: a verified report means the coefficients vanish
for ``0 <= n <= n_max``, nothing more.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Iterable

from .products import s_gf, singular_gf
from .report import Counterexample, VerificationReport
from .series import TruncatedSeries

__all__ = [
    "SOURCES",
    "CongruenceClaim",
    "THREE_DISSECTION_TABLE",
    "FOUR_DISSECTION_TABLE",
    "published_claims",
    "check_claim",
    "published_suite",
    "scan",
    "covers",
    "DEFAULT_N_MAX",
]

DEFAULT_N_MAX = 200

# Published families, named by the residue case they cover.
SOURCES = ("mod9-K2-i1", "mod9-K2-i2", "mod3-K0-i0", "mod9-K2-i0", "mod4",
           "singular-3-1", "scanned")


@dataclass(frozen=True, order=True)
class CongruenceClaim:
    """``family_{K,i}(d*n + a) = 0 (mod m)`` for all n.

    ``family`` is ``"S"`` (the ``S_{K,i}`` numbers) or ``"Qbar"`` (singular
    overpartitions, generating function ``singular_gf(K, i)``).
    """

    K: int
    i: int
    a: int
    d: int
    m: int
    source: str = "scanned"
    family: str = "S"

    def __post_init__(self):
        if not (1 <= self.i and 2 * self.i <= self.K):
            raise ValueError(f"need 1 <= i <= K/2, got K={self.K}, i={self.i}")
        if self.d < 1 or not 0 <= self.a < self.d:
            raise ValueError(f"need 0 <= a < d, got a={self.a}, d={self.d}")
        if self.m < 1:
            raise ValueError("coefficient modulus must be positive")
        if self.source not in SOURCES:
            raise ValueError(f"unknown source {self.source!r}")
        if self.family not in ("S", "Qbar"):
            raise ValueError(f"unknown family {self.family!r}")

    @property
    def label(self) -> str:
        return (f"{self.family}_{{{self.K},{self.i}}}({self.d}n+{self.a}) "
                f"= 0 mod {self.m}")

    def series(self, N: int) -> TruncatedSeries:
        if self.family == "Qbar":
            return singular_gf(self.K, self.i, N)
        return s_gf(self.K, self.i, N)

    def to_dict(self) -> dict:
        return asdict(self)


# Case tables. Keys are residues; values are the vanishing progressions.
# 3-dissection, d = 9 unless noted, coefficient modulus 4.
_PAIRS_BY_NINE = {2: (5, 8), 5: (2, 8), 8: (2, 5)}

THREE_DISSECTION_TABLE = (
    # (source, K mod 3, i mod 3, selector, d)
    ("mod9-K2-i1", 2, 1, lambda K, i: (3, 6), 9),
    ("mod9-K2-i2", 2, 2, lambda K, i: _PAIRS_BY_NINE[i % 9], 9),
    ("mod3-K0-i0", 0, 0, lambda K, i: (2,), 3),
    ("mod9-K2-i0", 2, 0, lambda K, i: _PAIRS_BY_NINE[(K - i) % 9], 9),
)

# (K mod 4, i mod 4) -> residues a of S(4n + a) = 0 (mod 4)
FOUR_DISSECTION_TABLE = {
    (2, 1): (3,),
    (2, 3): (2,),
    (3, 0): (3,),
    (0, 0): (2, 3),
}


def published_claims(K_max: int) -> list[CongruenceClaim]:
    """Every published claim for ``2 <= K <= K_max``, ``1 <= i <= K/2``,
    plus the two mod-3 claims for ``Qbar_{3,1}`` when ``K_max >= 3``."""
    claims = []
    for K in range(2, K_max + 1):
        for i in range(1, K // 2 + 1):
            for source, kr, ir, pick, d in THREE_DISSECTION_TABLE:
                if K % 3 == kr and i % 3 == ir:
                    claims.extend(CongruenceClaim(K, i, a, d, 4, source)
                                  for a in pick(K, i))
            for a in FOUR_DISSECTION_TABLE.get((K % 4, i % 4), ()):
                claims.append(CongruenceClaim(K, i, a, 4, 4, "mod4"))
    if K_max >= 3:
        claims.extend(CongruenceClaim(3, 1, a, 9, 3, "singular-3-1", "Qbar")
                      for a in (3, 6))
    return claims


def check_claim(claim: CongruenceClaim, n_max: int,
                series: TruncatedSeries | None = None) -> VerificationReport:
    """Test the coefficient at ``d*n + a`` modulo ``m`` for ``0 <= n <= n_max``.

    ``series`` may be supplied (at precision ``>= d*n_max + a``) to share one
    expansion between claims.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    top = claim.d * n_max + claim.a
    if series is None:
        series = claim.series(top)
    common = dict(identity_id=claim.label, params=claim.to_dict(),
                  precision=top, modulus=claim.m, n_max=n_max)
    for n in range(n_max + 1):
        e = claim.d * n + claim.a
        c = series.coeff(e)
        if c % claim.m:
            return VerificationReport(
                status="failed", counterexample=Counterexample(n, e, c),
                **common)
    return VerificationReport(status="verified", **common)


class _SeriesCache:
    def __init__(self):
        self._store: dict[tuple, TruncatedSeries] = {}

    def get(self, claim: CongruenceClaim, top: int) -> TruncatedSeries:
        key = (claim.family, claim.K, claim.i)
        s = self._store.get(key)
        if s is None or s.precision < top:
            s = claim.series(top)
            self._store[key] = s
        return s


def published_suite(K_max: int, n_max: int = DEFAULT_N_MAX) -> list[VerificationReport]:
    """Check every published claim up to ``K_max`` through ``n_max``.

    Reports come back in the canonical claim order.
    """
    claims = sorted(published_claims(K_max))
    if not claims:
        return []
    top = max(c.d for c in claims) * n_max + max(c.d for c in claims)
    cache = _SeriesCache()
    return [check_claim(c, n_max, cache.get(c, top)) for c in claims]


def scan(K_range: Iterable[int], i_range: Iterable[int] | None, d: int, m: int,
         n_max: int = DEFAULT_N_MAX) -> list[CongruenceClaim]:
    """All ``(K, i, a)`` whose ``S_{K,i}(d*n + a)`` vanish mod ``m`` for
    ``0 <= n <= n_max``.

    Returned claims carry ``source="scanned"``: they are verified through
    ``n_max`` only. With ``n_max = 0`` a residue qualifies as soon as the
    single coefficient at ``a`` vanishes.
    """
    i_values = None if i_range is None else set(i_range)
    found = []
    for K in sorted(set(K_range)):
        for i in range(1, K // 2 + 1):
            if i_values is not None and i not in i_values:
                continue
            s = s_gf(K, i, d * n_max + d - 1)
            for a in range(d):
                if all(s.coeff(d * n + a) % m == 0 for n in range(n_max + 1)):
                    found.append(CongruenceClaim(K, i, a, d, m))
    return found


def covers(found: Iterable[CongruenceClaim], claim: CongruenceClaim) -> bool:
    """True when scanned progressions modulo a multiple D of ``claim.d``
    together imply ``claim``."""
    by_key: dict[tuple, set[int]] = {}
    for f in found:
        if f.family == claim.family and f.K == claim.K and f.i == claim.i \
                and f.m % claim.m == 0:
            by_key.setdefault(f.d, set()).add(f.a)
    for D, residues in by_key.items():
        if D % claim.d:
            continue
        needed = {claim.a + claim.d * t for t in range(D // claim.d)}
        if needed <= residues:
            return True
    return False
