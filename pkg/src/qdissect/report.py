"""Verification reports shared by identity checks and congruence checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Optional

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class Mismatch:
    exponent: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class Counterexample:
    n: int
    exponent: int
    coefficient: int


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking an identity or a congruence through a finite bound.

    ``verified`` here always means *verified through the stated bound*, never
    proved.
    """

    identity_id: str
    params: dict[str, Any]
    precision: int
    status: str
    modulus: Optional[int] = None
    mismatch: Optional[Mismatch] = None
    n_max: Optional[int] = None
    counterexample: Optional[Counterexample] = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.status not in ("verified", "failed"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "failed" and self.mismatch is None \
                and self.counterexample is None:
            raise ValueError("a failed report needs a mismatch or counterexample")

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "identity_id": self.identity_id,
            "params": dict(self.params),
            "precision": self.precision,
            "status": self.status,
        }
        if self.modulus is not None:
            out["modulus"] = self.modulus
        if self.mismatch is not None:
            m = self.mismatch
            out["mismatch"] = {"exponent": m.exponent, "lhs": m.lhs, "rhs": m.rhs}
        if self.n_max is not None:
            out["n_max"] = self.n_max
            out["bound"] = f"verified up to n={self.n_max}" if self.verified \
                else f"checked up to n={self.n_max}"
        if self.counterexample is not None:
            c = self.counterexample
            out["counterexample"] = {"n": c.n, "exponent": c.exponent,
                                     "coefficient": c.coefficient}
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def reports_to_json(reports, indent: int | None = 2) -> str:
    return json.dumps([r.to_dict() for r in reports], sort_keys=True,
                      indent=indent)
