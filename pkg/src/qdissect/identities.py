"""Registry of the named identities checked by ``qdissect verify``.

Each entry builds both sides at a precision and states its parameter schema.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .dissection import (p3_rhs, p4_rhs, s3_expansion_expr,
                         theta_dissect3_rhs, theta_dissect4_rhs,
                         verify_identity)
from .expr import Pochhammer, ThetaF, eta_quotient, evaluate, parse
from .products import (GordonParams, bressoud_multisum, bressoud_product,
                       overpartition_gf, rrg_overpartition_multisum,
                       rrg_overpartition_product, s_gf, theta_f)
from .report import VerificationReport

__all__ = ["Identity", "REGISTRY", "get_identity", "run_identity"]


@dataclass(frozen=True)
class Identity:
    id: str
    description: str
    params: tuple[str, ...]
    defaults: dict
    build: Callable[[dict, int], tuple]
    modulus: int | None = None
    validate: Callable[[dict], None] | None = None

    def check_params(self, params: dict) -> dict:
        unknown = set(params) - set(self.params)
        if unknown:
            raise ValueError(f"unknown parameter(s) for {self.id}: "
                             f"{', '.join(sorted(unknown))}")
        merged = dict(self.defaults)
        merged.update(params)
        missing = [p for p in self.params if p not in merged]
        if missing:
            raise ValueError(f"{self.id} needs parameter(s): {', '.join(missing)}")
        if self.validate is not None:
            self.validate(merged)
        return merged


def _ik_less(p):
    if not 1 <= p["i"] < p["k"]:
        raise ValueError(f"need 1 <= i < k, got i={p['i']}, k={p['k']}")


def _ik_half(p):
    if not (1 <= p["i"] and 2 * p["i"] <= p["k"]):
        raise ValueError(f"need 1 <= i <= k/2, got i={p['i']}, k={p['k']}")


def _gordon(p):
    GordonParams(p["k"], p["i"], p["j"])


def _jtp_check(p):
    if p["sign"] not in (1, -1):
        raise ValueError("sign must be 1 or -1")


def _b_p3(p, N):
    return overpartition_gf(N), evaluate(p3_rhs(), N)


def _b_p4(p, N):
    return overpartition_gf(N), evaluate(p4_rhs(), N)


def _b_d3(p, N):
    lhs = theta_f(-1, p["i"], -1, p["k"] - p["i"], N).to_truncated()
    return lhs, theta_dissect3_rhs(p["i"], p["k"], N).to_truncated()


def _b_diss4(p, N):
    lhs = theta_f(-1, p["i"], -1, p["k"] - p["i"], N).to_truncated()
    return lhs, theta_dissect4_rhs(p["i"], p["k"], N).to_truncated()


def _b_s3(p, N):
    return s_gf(p["k"], p["i"], N), evaluate(s3_expansion_expr(p["k"], p["i"]), N)


def _b_ab(p, N):
    g = GordonParams(p["k"], p["i"], p["j"])
    return bressoud_multisum(g, N), bressoud_product(g, N)


def _b_cd(p, N):
    g = GordonParams(p["k"], p["i"], p["j"])
    return rrg_overpartition_multisum(g, N), rrg_overpartition_product(g, N)


def _b_q24q8(p, N):
    # exact sides; the registry modulus (or --mod) is applied when comparing
    lhs = evaluate(parse("F(2)^4/F(1)^8"), N)
    rhs = evaluate(eta_quotient({6: 16, 9: 24, 3: -32, 18: -12}), N)
    return lhs, rhs


def _b_jtp(p, N):
    # sum z^n q^(n^2) = f(zq, q/z) against (-zq; q^2)(-q/z; q^2)(q^2; q^2)
    a, s = p["a"], p["sign"]
    lhs = ThetaF(s, 1 + a, s, 1 - a)
    negated = s == 1
    rhs = (Pochhammer(1 + a, 2, negated) * Pochhammer(1 - a, 2, negated)
           * Pochhammer(2, 2))
    return evaluate(lhs, N), evaluate(rhs, N)


REGISTRY: dict[str, Identity] = {
    ident.id: ident for ident in [
        Identity("p3", "3-dissection of f_2/f_1^2", (), {}, _b_p3),
        Identity("p4", "4-dissection of f_2/f_1^2", (), {}, _b_p4),
        Identity("d3", "3-dissection of f(-q^i,-q^(k-i))", ("i", "k"), {},
                 _b_d3, validate=_ik_less),
        Identity("diss4", "4-way split of f(-q^i,-q^(k-i)) by n mod 4",
                 ("i", "k"), {}, _b_diss4, validate=_ik_less),
        Identity("S3", "nine-term 3-dissection of the S_{k,i} generating "
                 "function", ("k", "i"), {}, _b_s3, validate=_ik_half),
        Identity("AB", "Bressoud multisum = product", ("k", "i", "j"), {},
                 _b_ab, validate=_gordon),
        Identity("CD", "overpartition Andrews-Gordon multisum = product",
                 ("k", "i", "j"), {}, _b_cd, validate=_gordon),
        Identity("q24q8", "f_2^4/f_1^8 = (f_6^4 f_9^6/(f_3^8 f_18^3))^4 mod 4",
                 (), {}, _b_q24q8, modulus=4),
        Identity("jtp", "Jacobi triple product with z = sign*q^a",
                 ("a", "sign"), {"sign": 1}, _b_jtp, validate=_jtp_check),
    ]
}


def get_identity(identity_id: str) -> Identity:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}; known: "
                       f"{', '.join(REGISTRY)}") from None


def run_identity(identity_id: str, params: dict | None, N: int,
                 modulus: int | None = None) -> VerificationReport:
    """Build both sides of a registered identity and compare them."""
    ident = get_identity(identity_id)
    merged = ident.check_params(params or {})
    lhs, rhs = ident.build(merged, N)
    mod = modulus if modulus is not None else ident.modulus
    return verify_identity(lhs, rhs, N, mod, identity_id=ident.id,
                           params=merged)
