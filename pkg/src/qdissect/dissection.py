"""m-dissections of power series and the dissection identities for the
overpartition and theta-function generating functions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union

from .expr import (IntConst, Monomial, QExpr, ThetaF, eta_quotient,
                   evaluate)
from .products import theta_f
from .report import Mismatch, VerificationReport
from .series import LaurentSeries, TruncatedSeries, _Series

__all__ = [
    "Dissection",
    "dissect",
    "recombine",
    "p3_terms",
    "p3_components",
    "p3_rhs",
    "p4_terms",
    "p4_components",
    "p4_rhs",
    "theta_dissect3_terms",
    "theta_dissect3_rhs",
    "theta_dissect4_terms",
    "theta_dissect4_rhs",
    "theta3_exprs",
    "s3_expansion_expr",
    "s3_expansion_rhs",
    "s4_mod4_expr",
    "progression_case",
    "verify_identity",
    "verify_theta_dissection",
]


@dataclass(frozen=True)
class Dissection:
    """Components ``c_r`` with ``s = sum_r q^r c_r(q^m)``."""

    base: int
    components: tuple[TruncatedSeries, ...]

    def __getitem__(self, r: int) -> TruncatedSeries:
        return self.components[r]

    @property
    def precision(self) -> int:
        m = self.base
        return min(m * (c.precision + 1) + r - 1
                   for r, c in enumerate(self.components))


def dissect(s: _Series, m: int) -> Dissection:
    """Split ``s`` by exponent residue mod ``m``, re-indexing ``q^(mn+r)``
    as ``q^n`` in component ``r``."""
    if m < 2:
        raise ValueError("dissection base must be at least 2")
    N = s.precision
    if N < m - 1:
        raise ValueError(f"precision {N} too small for a {m}-dissection")
    if s.min_exp < 0 and not isinstance(s, TruncatedSeries):
        s = s.to_truncated()
    comps = []
    for r in range(m):
        top = (N - r) // m
        coeffs = [s.coeff(m * n + r) for n in range(top + 1)]
        if s.modulus is not None:
            comps.append(type(s)(coeffs, top, s.modulus))
        else:
            comps.append(TruncatedSeries(coeffs, top))
    return Dissection(m, tuple(comps))


def recombine(d: Dissection) -> TruncatedSeries:
    """Inverse of :func:`dissect`."""
    m = d.base
    N = d.precision
    coeffs = [0] * (N + 1)
    for r, c in enumerate(d.components):
        for n in range(c.precision + 1):
            e = m * n + r
            if e <= N:
                coeffs[e] = c.coeff(n)
    mod = d.components[0].modulus
    if mod is not None:
        return type(d.components[0])(coeffs, N, mod)
    return TruncatedSeries(coeffs, N)


# -- the overpartition dissections ----------------------------------------

def _dilate(powers: dict[int, int], num: int, den: int = 1) -> dict[int, int]:
    return {n * num // den: e for n, e in powers.items()}


# f_2/f_1^2 = sum_r c_r q^r P_r(q^3) with these eta quotients P_r
_P3 = (
    (1, {6: 4, 9: 6, 3: -8, 18: -3}),
    (2, {6: 3, 9: 3, 3: -7}),
    (4, {6: 2, 18: 3, 3: -6}),
)

_P4 = (
    (1, {8: 19, 4: -14, 16: -6}),
    (2, {8: 13, 4: -12, 16: -2}),
    (4, {8: 7, 16: 2, 4: -10}),
    (8, {8: 1, 16: 6, 4: -8}),
)


def _scaled_term(coef: int, shift: int, body: QExpr) -> QExpr:
    out = body
    if shift:
        out = Monomial(shift) * out
    if coef != 1:
        out = IntConst(coef) * out
    return out


def _sum(terms: list[QExpr]) -> QExpr:
    total = terms[0]
    for t in terms[1:]:
        total = total + t
    return total


def p3_terms() -> list[QExpr]:
    """The three summands of the 3-dissection of ``f_2/f_1^2``."""
    return [_scaled_term(c, r, eta_quotient(p)) for r, (c, p) in enumerate(_P3)]


def p3_components() -> list[QExpr]:
    """The 3-dissection components after ``q^3 -> q``."""
    return [_scaled_term(c, 0, eta_quotient(_dilate(p, 1, 3))) for c, p in _P3]


def p3_rhs() -> QExpr:
    return _sum(p3_terms())


def p4_terms() -> list[QExpr]:
    """The four summands of the 4-dissection of ``f_2/f_1^2``."""
    return [_scaled_term(c, r, eta_quotient(p)) for r, (c, p) in enumerate(_P4)]


def p4_components() -> list[QExpr]:
    """The 4-dissection components after ``q^4 -> q``."""
    return [_scaled_term(c, 0, eta_quotient(_dilate(p, 1, 4))) for c, p in _P4]


def p4_rhs() -> QExpr:
    return _sum(p4_terms())


# -- theta dissections -------------------------------------------------------

def _check_ik(i: int, k: int) -> None:
    if not 1 <= i < k:
        raise ValueError(f"need 1 <= i < k, got i={i}, k={k}")


def theta3_exprs(i: int, k: int) -> list[tuple[int, int, ThetaF]]:
    """``(sign, shift, theta)`` triples with
    ``f(-q^i, -q^(k-i)) = sum sign * q^shift * theta``, split by ``n mod 3``."""
    return [
        (1, 0, ThetaF(-1, 3 * i + 3 * k, -1, 6 * k - 3 * i)),
        (-1, i, ThetaF(-1, 3 * i + 6 * k, -1, 3 * k - 3 * i)),
        (1, 2 * i + k, ThetaF(-1, -3 * i, -1, 3 * i + 9 * k)),
    ]


def theta_dissect3_terms(i: int, k: int, N: int) -> list[LaurentSeries]:
    _check_ik(i, k)
    return [theta_f(-1, t.r, -1, t.s, N).shift(shift).scale(sign)
            for sign, shift, t in theta3_exprs(i, k)]


def theta_dissect3_rhs(i: int, k: int, N: int) -> LaurentSeries:
    """``f(-q^(3i+3k), -q^(6k-3i)) - q^i f(-q^(3i+6k), -q^(3k-3i))
    + q^(2i+k) f(-q^(-3i), -q^(3i+9k))``."""
    a, b, c = theta_dissect3_terms(i, k, N)
    return (a + b + c).truncate(N)


def _theta4_raw(i: int, k: int):
    # residues n = 4m, 4m+1, 4m+2, 4m+3 of f(-q^i, -q^(k-i)); each branch has
    # constant sign (+, -, +, -) so the inner thetas have positive arguments
    return [
        (1, 0, (6 * k + 4 * i, 10 * k - 4 * i)),
        (-1, i, (10 * k + 4 * i, 6 * k - 4 * i)),
        (1, 2 * i + k, (14 * k + 4 * i, 2 * k - 4 * i)),
        (-1, 3 * i + 3 * k, (18 * k + 4 * i, -2 * k - 4 * i)),
    ]


def theta_dissect4_terms(i: int, k: int, N: int,
                         theta_sign: int = 1) -> list[LaurentSeries]:
    """The four summands splitting ``f(-q^i, -q^(k-i))`` by ``n mod 4``.

    The inner thetas are ``f(s*q^A, s*q^B)`` with ``s = theta_sign``. Only
    ``theta_sign=1`` reproduces the left side; ``-1`` is kept so the sign
    requirement can be demonstrated.
    """
    _check_ik(i, k)
    return [theta_f(theta_sign, r, theta_sign, s, N).shift(shift).scale(sign)
            for sign, shift, (r, s) in _theta4_raw(i, k)]


def theta_dissect4_rhs(i: int, k: int, N: int,
                       theta_sign: int = 1) -> LaurentSeries:
    a, b, c, d = theta_dissect4_terms(i, k, N, theta_sign)
    return (a + b + c + d).truncate(N)


def verify_theta_dissection(i: int, k: int, N: int,
                            base: int = 3) -> VerificationReport:
    """Compare a theta dissection against the direct expansion.

    Every negative exponent on the dissected side must cancel; a survivor
    raises :class:`~qdissect.series.NegativeExponentError`.
    """
    if base == 3:
        rhs = theta_dissect3_rhs(i, k, N)
        ident = "d3"
    elif base == 4:
        rhs = theta_dissect4_rhs(i, k, N)
        ident = "diss4"
    else:
        raise ValueError("base must be 3 or 4")
    rhs = rhs.to_truncated()
    lhs = theta_f(-1, i, -1, k - i, N).to_truncated()
    return verify_identity(lhs, rhs, N, identity_id=ident,
                           params={"i": i, "k": k})


# -- the S_{k,i} expansions --------------------------------------------------

def s3_expansion_expr(k: int, i: int) -> QExpr:
    """Nine-term product of the theta 3-dissection with the overpartition
    3-dissection."""
    if not (1 <= i and 2 * i <= k):
        raise ValueError(f"need 1 <= i <= k/2, got k={k}, i={i}")
    terms = []
    for r, (c, powers) in enumerate(_P3):
        pr = eta_quotient(powers)
        for sign, shift, theta in theta3_exprs(i, k):
            terms.append(_scaled_term(sign * c, shift + r, theta * pr))
    return _sum(terms)


def s3_expansion_rhs(k: int, i: int, N: int) -> TruncatedSeries:
    return evaluate(s3_expansion_expr(k, i), N)


def s4_mod4_expr(k: int, i: int) -> QExpr:
    """``f(-q^i,-q^(k-i)) * (first two 4-dissection terms)``, which agrees
    with the S_{k,i} generating function modulo 4."""
    pos = []
    for sign, shift, (r, s) in _theta4_raw(i, k):
        pos.append(_scaled_term(sign, shift, ThetaF(1, r, 1, s)))
    head = p4_terms()[:2]
    return _sum(pos) * (head[0] + head[1])


# progression components of the S_{k,i} generating function after q^3 -> q

def _E(powers: dict[int, int]) -> QExpr:
    return eta_quotient(powers)


_Q0 = {2: 4, 3: 6, 1: -8, 6: -3}        # f2^4 f3^6 / (f1^8 f6^3)
_Q2 = {2: 2, 6: 3, 1: -6}               # f2^2 f6^3 / f1^6


def _theta_small(i: int, k: int):
    th1 = ThetaF(-1, i + k, -1, 2 * k - i)
    th2 = ThetaF(-1, i + 2 * k, -1, k - i)
    th3 = ThetaF(-1, -i, -1, i + 3 * k)
    return th1, th2, th3


def _mod4_tail() -> QExpr:
    # (f6^4 f9^6/(f3^8 f18^3))^4 * f3^6/f6^3
    return _E({6: 16 - 3, 9: 24, 3: -32 + 6, 18: -12})


def progression_case(k: int, i: int):
    """Closed forms for one progression component of ``S_{k,i}``.

    Returns ``(section, r, exact, reduced)`` where ``sum S(3n+r) q^n``
    equals ``exact`` and is congruent to ``reduced`` modulo 4. ``section``
    is the case label also used by
    :data:`qdissect.congruence.SOURCES`; ``None`` when no case applies.
    """
    if not (1 <= i and 2 * i <= k):
        raise ValueError(f"need 1 <= i <= k/2, got k={k}, i={i}")
    th1, th2, th3 = _theta_small(i, k)
    Q0, Q2 = _E(_Q0), _E(_Q2)
    if k % 3 == 2 and i % 3 == 1:
        exact = (th1 * Q0
                 - 4 * Monomial((i + 2) // 3) * th2 * Q2
                 + 4 * Monomial((2 * i + k + 2) // 3) * th3 * Q2)
        reduced = th1 * _mod4_tail()
        return "mod9-K2-i1", 0, exact, reduced
    if k % 3 == 2 and i % 3 == 2:
        exact = (4 * th1 * Q2
                 + 4 * Monomial((2 * i + k) // 3) * th3 * Q2
                 - Monomial((i - 2) // 3) * th2 * Q0)
        reduced = -(Monomial((i - 2) // 3) * th2 * _mod4_tail())
        return "mod9-K2-i2", 2, exact, reduced
    if k % 3 == 0 and i % 3 == 0:
        exact = 4 * Q2 * (th1 - Monomial(i // 3) * th2
                          + Monomial((2 * i + k) // 3) * th3)
        return "mod3-K0-i0", 2, exact, IntConst(0)
    if k % 3 == 2 and i % 3 == 0:
        exact = (4 * (th1 - Monomial(i // 3) * th2) * Q2
                 + Monomial((2 * i + k - 2) // 3) * th3 * Q0)
        reduced = Monomial((2 * i + k - 2) // 3) * th3 * _mod4_tail()
        return "mod9-K2-i0", 2, exact, reduced
    return None, None, None, None


# -- generic identity verification -----------------------------------------

Side = Union[QExpr, _Series]


def _materialize(side: Side, N: int, modulus: int | None):
    if isinstance(side, QExpr):
        return evaluate(side, N, modulus)
    if modulus is not None and side.modulus != modulus:
        return side.reduce_mod(modulus)
    return side


def verify_identity(lhs: Side, rhs: Side, N: int, modulus: int | None = None,
                    identity_id: str = "custom",
                    params: dict[str, Any] | None = None) -> VerificationReport:
    """Check ``lhs == rhs`` through ``q**N`` (optionally modulo ``modulus``).

    A failure reports the first differing exponent with both coefficients.
    """
    a = _materialize(lhs, N, modulus)
    b = _materialize(rhs, N, modulus)
    e = a.first_difference(b, N)
    common = dict(identity_id=identity_id, params=dict(params or {}),
                  precision=N, modulus=modulus)
    if e is None:
        return VerificationReport(status="verified", **common)
    return VerificationReport(status="failed",
                              mismatch=Mismatch(e, a.coeff(e), b.coeff(e)),
                              **common)
