"""Exact q-series tools for overpartition congruences of
Rogers-Ramanujan-Gordon type."""

from .series import (LaurentSeries, NegativeExponentError, PrecisionError,
                     ResidueSeries, TruncatedSeries, make)
from .products import (GordonParams, euler_f, overpartition_gf, pochhammer,
                       s_gf, singular_gf, theta_f)
from .expr import evaluate, parse
from .dissection import dissect, recombine, verify_identity
from .congruence import CongruenceClaim, check_claim, published_suite, scan

__version__ = "0.1.0"

__all__ = [
    "LaurentSeries", "NegativeExponentError", "PrecisionError",
    "ResidueSeries", "TruncatedSeries", "make",
    "GordonParams", "euler_f", "overpartition_gf", "pochhammer", "s_gf",
    "singular_gf", "theta_f",
    "evaluate", "parse",
    "dissect", "recombine", "verify_identity",
    "CongruenceClaim", "check_claim", "published_suite", "scan",
]
