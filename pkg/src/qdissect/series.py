"""Exact truncated power series and bounded-below Laurent series in q.

A series with precision ``N`` is an exact representative of its class modulo
``q**(N+1)``: every coefficient at exponents ``<= N`` is known, nothing beyond.
Coefficients are Python ints (arbitrary precision). Storage is dense.

Three public types share one implementation:

* :class:`TruncatedSeries` -- exponents ``0..N``, integer coefficients.
* :class:`LaurentSeries` -- exponents ``min_exp..N``; ``min_exp`` may be negative.
  May optionally carry a coefficient modulus (used when evaluating expressions
  in a residue ring).
* :class:`ResidueSeries` -- exponents ``0..N``, coefficients in ``[0, m)``.

Values are immutable; all operations return new objects.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from typing import Union

__all__ = [
    "PrecisionError",
    "NegativeExponentError",
    "TruncatedSeries",
    "LaurentSeries",
    "ResidueSeries",
    "make",
    "one",
    "monomial",
    "to_csv",
    "from_csv",
]


class PrecisionError(IndexError):
    """Raised when a coefficient beyond the known precision is requested."""


class NegativeExponentError(ValueError):
    """Raised when a Laurent series with surviving negative exponents is
    converted to a power series."""


def _convolve(x: list, y: list, length: int) -> list:
    out = [0] * length
    if length <= 0:
        return out
    x = x[:length]
    y = y[:length]
    nzx = sum(1 for c in x if c)
    nzy = sum(1 for c in y if c)
    if nzx > nzy:
        x, y = y, x
    for i, c in enumerate(x):
        if not c:
            continue
        n = length - i
        seg = out[i:length]
        if c == 1:
            out[i:i + min(n, len(y))] = [o + v for o, v in zip(seg, y)]
        elif c == -1:
            out[i:i + min(n, len(y))] = [o - v for o, v in zip(seg, y)]
        else:
            out[i:i + min(n, len(y))] = [o + c * v for o, v in zip(seg, y)]
    return out


def _unit_inverse(c: int, modulus: int | None) -> int:
    if modulus is None:
        if c not in (1, -1):
            raise ZeroDivisionError(f"constant term {c} is not a unit")
        return c
    try:
        return pow(c, -1, modulus)
    except ValueError:
        raise ZeroDivisionError(
            f"constant term {c} is not a unit modulo {modulus}") from None


def _divide(x: list, y: list, length: int, modulus: int | None) -> list:
    """Solve ``y * h = x`` for the first ``length`` coefficients of ``h``.

    ``y[0]`` must be a unit. Cost is ``length * nnz(y)``.
    """
    inv0 = _unit_inverse(y[0] if y else 0, modulus)
    taps = [(j, c) for j, c in enumerate(y[:length]) if c and j > 0]
    h = [0] * length
    for n in range(length):
        acc = x[n] if n < len(x) else 0
        for j, c in taps:
            if j > n:
                break
            acc -= c * h[n - j]
        acc *= inv0
        if modulus is not None:
            acc %= modulus
        h[n] = acc
    return h


class _Series:
    __slots__ = ("_c", "_lo", "_prec", "_mod")

    def __init__(self, *args, **kwargs):  # pragma: no cover - overridden
        raise NotImplementedError

    @classmethod
    def _raw(cls, c: list, precision: int, lo: int = 0,
             modulus: int | None = None):
        obj = object.__new__(cls)
        length = max(precision - lo + 1, 0)
        if len(c) < length:
            c = c + [0] * (length - len(c))
        elif len(c) > length:
            c = c[:length]
        if modulus is not None:
            c = [v % modulus for v in c]
        obj._c = c
        obj._lo = lo
        obj._prec = precision
        obj._mod = modulus
        return obj

    # -- basic accessors ---------------------------------------------------

    @property
    def precision(self) -> int:
        return self._prec

    @property
    def min_exp(self) -> int:
        return self._lo

    @property
    def modulus(self) -> int | None:
        return self._mod

    def coeff(self, n: int) -> int:
        """Coefficient of ``q**n``; raises :class:`PrecisionError` past the
        precision."""
        if n > self._prec:
            raise PrecisionError(
                f"coefficient of q^{n} requested but series is only known "
                f"through q^{self._prec}")
        if n < self._lo:
            return 0
        return self._c[n - self._lo]

    __getitem__ = coeff

    def items(self) -> Iterator[tuple[int, int]]:
        """Yield ``(exponent, coefficient)`` for every nonzero coefficient."""
        for idx, c in enumerate(self._c):
            if c:
                yield idx + self._lo, c

    def valuation(self) -> int | None:
        """Smallest exponent with a nonzero coefficient, or None."""
        for e, _ in self.items():
            return e
        return None

    def is_zero(self) -> bool:
        return not any(self._c)

    def coefficients(self, start: int | None = None) -> list[int]:
        """Dense coefficient list for exponents ``start..precision``."""
        if start is None:
            start = self._lo
        return [self.coeff(e) for e in range(start, self._prec + 1)]

    # -- helpers -----------------------------------------------------------

    def _span(self, lo: int, hi: int) -> list:
        """Coefficients for exponents lo..hi (hi <= precision)."""
        out = [0] * max(hi - lo + 1, 0)
        a = max(lo, self._lo)
        for e in range(a, hi + 1):
            out[e - lo] = self._c[e - self._lo]
        return out

    def _result_class(self, other: "_Series"):
        if isinstance(self, LaurentSeries) or isinstance(other, LaurentSeries):
            return LaurentSeries
        if self._mod is not None or other._mod is not None:
            return ResidueSeries
        return TruncatedSeries

    def _common_modulus(self, other: "_Series") -> int | None:
        if self._mod is None:
            return other._mod
        if other._mod is None or other._mod == self._mod:
            return self._mod
        raise ValueError(
            f"incompatible moduli {self._mod} and {other._mod}")

    def _coerce(self, other) -> "_Series":
        if isinstance(other, _Series):
            return other
        if isinstance(other, int):
            # constants are exact: give them effectively unbounded precision
            return TruncatedSeries._raw([other], max(self._prec, 0))
        return NotImplemented

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        lo = min(self._lo, other._lo)
        prec = min(self._prec, other._prec)
        a = self._span(lo, prec)
        b = other._span(lo, prec)
        cls = self._result_class(other)
        return cls._raw([x + y for x, y in zip(a, b)], prec, lo,
                        self._common_modulus(other))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw([-v for v in self._c], self._prec, self._lo,
                               self._mod)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int):
        """Multiply every coefficient by the integer ``c``."""
        return type(self)._raw([c * v for v in self._c], self._prec, self._lo,
                               self._mod)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, _Series):
            return NotImplemented
        lo = self._lo + other._lo
        prec = min(self._prec + other._lo, other._prec + self._lo)
        mod = self._common_modulus(other)
        c = _convolve(self._c, other._c, prec - lo + 1)
        return self._result_class(other)._raw(c, prec, lo, mod)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def _as_unit_operand(self) -> tuple[list, int]:
        v = self.valuation()
        if v is not None and v < 0:
            raise ZeroDivisionError(
                f"series has a term at negative exponent {v}; not a unit")
        if self._lo > 0 or self._prec < 0:
            raise ZeroDivisionError("series has zero constant term")
        return self._c[-self._lo:], self._prec

    def invert(self):
        """Multiplicative inverse; the constant term must be a unit."""
        y, prec = self._as_unit_operand()
        h = _divide([1], y, prec + 1, self._mod)
        return type(self)._raw(h, prec, 0, self._mod)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries._raw([other], max(self._prec, 0))
        if not isinstance(other, _Series):
            return NotImplemented
        y, yprec = other._as_unit_operand()
        mod = self._common_modulus(other)
        prec = min(self._prec, yprec + self._lo)
        h = _divide(self._c, y, prec - self._lo + 1, mod)
        return self._result_class(other)._raw(h, prec, self._lo, mod)

    def __rtruediv__(self, other):
        if isinstance(other, int):
            return self.invert().scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return self.invert() ** (-e)
        result = None
        base = self
        while e:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if e:
                base = base * base
        if result is None:
            return type(self)._raw([1], max(self._prec, 0), 0, self._mod)
        return result

    def pow_int(self, e: int):
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        return self ** e

    def shift(self, t: int) -> "LaurentSeries":
        """Multiply by ``q**t``."""
        return LaurentSeries._raw(list(self._c), self._prec + t, self._lo + t,
                                  self._mod)

    def truncate(self, n: int):
        """Forget all coefficients beyond ``q**n``."""
        if n > self._prec:
            raise PrecisionError(f"cannot raise precision {self._prec} to {n}")
        return type(self)._raw(self._c, n, self._lo, self._mod)

    def reduce_mod(self, m: int):
        """Reduce coefficients modulo ``m``."""
        if m < 2:
            raise ValueError("modulus must be at least 2")
        if self._mod is not None and self._mod % m:
            raise ValueError(f"cannot reduce modulo {self._mod} to {m}")
        if isinstance(self, LaurentSeries):
            return LaurentSeries._raw(self._c, self._prec, self._lo, m)
        return ResidueSeries._raw(self._c, self._prec, 0, m)

    def equal_up_to(self, other: "_Series", n: int) -> bool:
        """True when all coefficients through ``q**n`` agree."""
        if n > self._prec or n > other._prec:
            raise PrecisionError(
                f"cannot compare through q^{n}: precisions are "
                f"{self._prec} and {other._prec}")
        mod = self._common_modulus(other)
        lo = min(self._lo, other._lo)
        for e in range(lo, n + 1):
            d = self.coeff(e) - other.coeff(e)
            if (d % mod if mod else d):
                return False
        return True

    def first_difference(self, other: "_Series",
                         n: int | None = None) -> int | None:
        """Smallest exponent ``<= n`` where the coefficients differ."""
        if n is None:
            n = min(self._prec, other._prec)
        mod = self._common_modulus(other)
        for e in range(min(self._lo, other._lo), n + 1):
            d = self.coeff(e) - other.coeff(e)
            if (d % mod if mod else d):
                return e
        return None

    # -- comparison / display ---------------------------------------------

    def _key(self):
        return (self._prec, self._mod, tuple(self.items()))

    def __eq__(self, other):
        if isinstance(other, int):
            other = TruncatedSeries._raw([other], self._prec)
        if not isinstance(other, _Series):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        terms = []
        for e, c in self.items():
            if len(terms) >= 8:
                terms.append("...")
                break
            terms.append(f"{c}*q^{e}" if e else f"{c}")
        body = " + ".join(terms) or "0"
        mod = f" (mod {self._mod})" if self._mod else ""
        return f"{type(self).__name__}({body} + O(q^{self._prec + 1}){mod})"


def _dense_from(coeffs, precision: int, lo: int) -> list:
    out = [0] * max(precision - lo + 1, 0)
    if isinstance(coeffs, Mapping):
        for e, c in coeffs.items():
            if not lo <= e <= precision:
                raise ValueError(
                    f"exponent {e} outside the range [{lo}, {precision}]")
            out[e - lo] = int(c)
    else:
        coeffs = list(coeffs)
        if len(coeffs) > len(out):
            raise ValueError(
                f"{len(coeffs)} coefficients do not fit precision {precision}")
        for idx, c in enumerate(coeffs):
            out[idx] = int(c)
    return out


class TruncatedSeries(_Series):
    """Power series with integer coefficients known through ``q**precision``.

    ``coeffs`` is either a sequence indexed by exponent or a mapping
    ``exponent -> coefficient``.
    """

    __slots__ = ()

    def __init__(self, coeffs: Union[Sequence[int], Mapping[int, int]],
                 precision: int):
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        self._c = _dense_from(coeffs, precision, 0)
        self._lo = 0
        self._prec = precision
        self._mod = None

    def to_laurent(self) -> "LaurentSeries":
        return LaurentSeries._raw(self._c, self._prec, 0)

    def to_truncated(self) -> "TruncatedSeries":
        return self


class LaurentSeries(_Series):
    """Series with finitely many negative exponents, known through
    ``q**precision``."""

    __slots__ = ()

    def __init__(self, coeffs: Union[Sequence[int], Mapping[int, int]],
                 precision: int, min_exp: int = 0, modulus: int | None = None):
        if precision < min_exp - 1:
            raise ValueError("precision below min_exp")
        self._c = _dense_from(coeffs, precision, min_exp)
        self._lo = min_exp
        self._prec = precision
        self._mod = modulus
        if modulus is not None:
            self._c = [v % modulus for v in self._c]

    def to_truncated(self) -> Union[TruncatedSeries, "ResidueSeries"]:
        """Convert to a power series.

        Raises :class:`NegativeExponentError` if any coefficient at a negative
        exponent is nonzero.
        """
        v = self.valuation()
        if v is not None and v < 0:
            raise NegativeExponentError(
                f"coefficient {self.coeff(v)} survives at exponent {v}")
        if self._prec < 0:
            raise PrecisionError("no nonnegative exponents are known")
        c = self._span(0, self._prec)
        if self._mod is not None:
            return ResidueSeries._raw(c, self._prec, 0, self._mod)
        return TruncatedSeries._raw(c, self._prec)

    def to_laurent(self) -> "LaurentSeries":
        return self


class ResidueSeries(_Series):
    """Power series with coefficients in ``Z/mZ``, stored in ``[0, m)``."""

    __slots__ = ()

    def __init__(self, coeffs: Union[Sequence[int], Mapping[int, int]],
                 precision: int, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be at least 2")
        if precision < 0:
            raise ValueError("precision must be nonnegative")
        self._c = [v % modulus for v in _dense_from(coeffs, precision, 0)]
        self._lo = 0
        self._prec = precision
        self._mod = modulus

    def lift(self) -> TruncatedSeries:
        """Integer series with the canonical representatives in ``[0, m)``."""
        return TruncatedSeries._raw(list(self._c), self._prec)

    def to_truncated(self) -> "ResidueSeries":
        return self

    def to_laurent(self) -> LaurentSeries:
        return LaurentSeries._raw(self._c, self._prec, 0, self._mod)


def make(coeffs: Union[Sequence[int], Mapping[int, int]],
         precision: int) -> TruncatedSeries:
    """Build a :class:`TruncatedSeries`; absent exponents are zero."""
    return TruncatedSeries(coeffs, precision)


def one(precision: int) -> TruncatedSeries:
    return TruncatedSeries._raw([1], precision)


def monomial(t: int, precision: int, c: int = 1) -> LaurentSeries:
    """``c * q**t`` known through ``q**precision``."""
    lo = min(t, 0)
    c_list = [0] * max(precision - lo + 1, 0)
    if lo <= t <= precision:
        c_list[t - lo] = c
    return LaurentSeries._raw(c_list, precision, lo)


def to_csv(series: _Series) -> str:
    """``# precision=N`` header followed by ``n,coefficient`` lines."""
    lines = [f"# precision={series.precision}"]
    if series.modulus is not None:
        lines.append(f"# modulus={series.modulus}")
    start = min(series.min_exp, 0)
    for n in range(start, series.precision + 1):
        lines.append(f"{n},{series.coeff(n)}")
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> Union[TruncatedSeries, LaurentSeries, ResidueSeries]:
    """Inverse of :func:`to_csv`."""
    precision = None
    modulus = None
    coeffs: dict[int, int] = {}
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            if key.strip() == "precision":
                precision = int(value)
            elif key.strip() == "modulus":
                modulus = int(value)
            continue
        n, c = line.split(",")
        coeffs[int(n)] = int(c)
    if precision is None:
        raise ValueError("missing '# precision=N' header")
    lo = min(coeffs, default=0)
    if lo < 0:
        return LaurentSeries(coeffs, precision, lo, modulus)
    if modulus is not None:
        return ResidueSeries(coeffs, precision, modulus)
    return TruncatedSeries(coeffs, precision)

