"""Expression trees over q-series atoms, their text form, and evaluation.

Text grammar (whitespace ignored)::

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := '-' unary | power
    power   := primary ('^' int_atom)?
    primary := INT | NAME | 'q' | '(' expr ')'
             | 'P(' int ',' int [',' int] ')'     # (s*q^a; q^b)_inf
             | 'T(' int ',' int ',' int ',' int ')'  # f(sa*q^r, sb*q^s)
             | 'F(' int ')'                      # f_n = (q^n; q^n)_inf

Integer arguments are small integer expressions (``+ - *`` and parentheses)
over literals and bound parameter names, so ``T(-1,i,-1,k-i)`` works once
``i`` and ``k`` are supplied. ``P(-3,7)`` is ``(-q^3; q^7)_inf``; the optional
third argument gives the sign explicitly, ``P(a,b,-1)`` meaning
``(-q^a; q^b)_inf`` for any integer ``a``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Union

from .products import euler_f, pochhammer, theta_f
from .series import LaurentSeries, TruncatedSeries, ResidueSeries, monomial

__all__ = [
    "QExpr",
    "Pochhammer",
    "ThetaF",
    "EulerF",
    "Monomial",
    "IntConst",
    "Add",
    "Sub",
    "Mul",
    "Div",
    "Pow",
    "ParseError",
    "parse",
    "evaluate",
    "eta_quotient",
    "q",
]


class QExpr:
    """Base node. Supports ``+ - * / **`` with other nodes and ints."""

    def __add__(self, other):
        return Add(self, _wrap(other))

    def __radd__(self, other):
        return Add(_wrap(other), self)

    def __sub__(self, other):
        return Sub(self, _wrap(other))

    def __rsub__(self, other):
        return Sub(_wrap(other), self)

    def __mul__(self, other):
        return Mul(self, _wrap(other))

    def __rmul__(self, other):
        return Mul(_wrap(other), self)

    def __truediv__(self, other):
        return Div(self, _wrap(other))

    def __rtruediv__(self, other):
        return Div(_wrap(other), self)

    def __pow__(self, e: int):
        return Pow(self, e)

    def __neg__(self):
        return Mul(IntConst(-1), self)

    def __str__(self):
        return self.to_text()


def _wrap(x) -> QExpr:
    if isinstance(x, QExpr):
        return x
    if isinstance(x, int):
        return IntConst(x)
    raise TypeError(f"cannot use {type(x).__name__} in a q-expression")


@dataclass(frozen=True, eq=True)
class Pochhammer(QExpr):
    """``(q^a; q^b)_inf``, or ``(-q^a; q^b)_inf`` when ``negated``."""

    a: int
    b: int
    negated: bool = False

    def to_text(self):
        if self.negated:
            return f"P({self.a},{self.b},-1)" if self.a <= 0 else f"P({-self.a},{self.b})"
        return f"P({self.a},{self.b},1)" if self.a <= 0 else f"P({self.a},{self.b})"


@dataclass(frozen=True, eq=True)
class ThetaF(QExpr):
    """Ramanujan's ``f(sign_a*q^r, sign_b*q^s)``."""

    sign_a: int
    r: int
    sign_b: int
    s: int

    def to_text(self):
        return f"T({self.sign_a},{self.r},{self.sign_b},{self.s})"


@dataclass(frozen=True, eq=True)
class EulerF(QExpr):
    n: int

    def to_text(self):
        return f"F({self.n})"


@dataclass(frozen=True, eq=True)
class Monomial(QExpr):
    exponent: int
    coefficient: int = 1

    def to_text(self):
        body = f"q^({self.exponent})" if self.exponent < 0 else f"q^{self.exponent}"
        if self.coefficient == 1:
            return body
        return f"({self.coefficient}*{body})"


@dataclass(frozen=True, eq=True)
class IntConst(QExpr):
    value: int

    def to_text(self):
        return str(self.value) if self.value >= 0 else f"({self.value})"


@dataclass(frozen=True, eq=True)
class _Binary(QExpr):
    left: QExpr
    right: QExpr
    _symbol = "?"

    def to_text(self):
        return f"({self.left.to_text()}{self._symbol}{self.right.to_text()})"


class Add(_Binary):
    _symbol = "+"


class Sub(_Binary):
    _symbol = "-"


class Mul(_Binary):
    _symbol = "*"


class Div(_Binary):
    _symbol = "/"


@dataclass(frozen=True, eq=True)
class Pow(QExpr):
    base: QExpr
    exponent: int

    def to_text(self):
        e = f"({self.exponent})" if self.exponent < 0 else str(self.exponent)
        base = self.base.to_text()
        if isinstance(self.base, (Monomial, Pow)):
            base = f"({base})"
        return f"{base}^{e}"


q = Monomial(1)


def eta_quotient(powers: Mapping[int, int]) -> QExpr:
    """``prod f_n^e`` for ``{n: e}``; negative powers go to the denominator."""
    num: QExpr = IntConst(1)
    den: QExpr | None = None
    for n, e in sorted(powers.items()):
        if e > 0:
            num = _times(num, EulerF(n) if e == 1 else Pow(EulerF(n), e))
        elif e < 0:
            f = EulerF(n) if e == -1 else Pow(EulerF(n), -e)
            den = f if den is None else Mul(den, f)
    return num if den is None else Div(num, den)


def _times(a: QExpr, b: QExpr) -> QExpr:
    if isinstance(a, IntConst) and a.value == 1:
        return b
    return Mul(a, b)


# -- parsing ---------------------------------------------------------------


class ParseError(ValueError):
    def __init__(self, message: str, token: str | None = None,
                 position: int | None = None):
        super().__init__(message)
        self.token = token
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # pragma: no cover - the pattern always matches
            break
        if m.group(1):
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            ch = m.group(3)
            if ch not in "+-*/^(),":
                raise ParseError(f"unexpected character {ch!r} at position "
                                 f"{m.start(3)}", ch, m.start(3))
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, params: Mapping[str, int]):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.params = dict(params)

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str):
        kind, val, where = self.take()
        if val != value:
            shown = val or "end of input"
            raise ParseError(f"expected {value!r} but found {shown!r} at "
                             f"position {where}", val, where)

    def fail(self, tok):
        kind, val, where = tok
        shown = val or "end of input"
        raise ParseError(f"unexpected token {shown!r} at position {where}",
                         val, where)

    # series level
    def expr(self) -> QExpr:
        node = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            node = Add(node, rhs) if op == "+" else Sub(node, rhs)
        return node

    def term(self) -> QExpr:
        node = self.unary()
        while self.peek()[1] in ("*", "/") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.unary()
            node = Mul(node, rhs) if op == "*" else Div(node, rhs)
        return node

    def unary(self) -> QExpr:
        if self.peek()[:2] == ("op", "-"):
            self.take()
            inner = self.unary()
            if isinstance(inner, IntConst):
                return IntConst(-inner.value)
            return Mul(IntConst(-1), inner)
        return self.power()

    def power(self) -> QExpr:
        bare_q = self.peek()[:2] == ("name", "q")
        base = self.primary()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            e = self.int_atom()
            if bare_q:
                return Monomial(base.exponent * e)
            return Pow(base, e)
        return base

    def primary(self) -> QExpr:
        tok = self.peek()
        kind, val, _ = tok
        if kind == "int":
            self.take()
            return IntConst(int(val))
        if kind == "op" and val == "(":
            self.take()
            node = self.expr()
            self.expect(")")
            return node
        if kind == "name":
            if val == "q":
                self.take()
                return Monomial(1)
            if val in ("P", "T", "F") and self.tokens[self.pos + 1][1] == "(":
                self.take()
                self.take()
                args = [self.int_expr()]
                while self.peek()[:2] == ("op", ","):
                    self.take()
                    args.append(self.int_expr())
                self.expect(")")
                return self.atom(val, args, tok)
            if val in self.params:
                self.take()
                return IntConst(self.params[val])
        self.fail(tok)

    def atom(self, name: str, args: list[int], tok) -> QExpr:
        _, _, where = tok
        if name == "P":
            if len(args) == 2:
                a, b = args
                if a == 0:
                    raise ParseError("P(0,b) is ambiguous; use P(0,b,1) or "
                                     "P(0,b,-1)", name, where)
                return Pochhammer(abs(a), b, a < 0)
            if len(args) == 3 and args[2] in (1, -1):
                return Pochhammer(args[0], args[1], args[2] == -1)
            raise ParseError("P takes (a,b) or (a,b,sign)", name, where)
        if name == "T":
            if len(args) != 4 or args[0] not in (1, -1) or args[2] not in (1, -1):
                raise ParseError("T takes (sign_a, r, sign_b, s) with signs "
                                 "+-1", name, where)
            return ThetaF(*args)
        if len(args) != 1 or args[0] < 1:
            raise ParseError("F takes one positive integer", name, where)
        return EulerF(args[0])

    # integer level
    def int_expr(self) -> int:
        value = self.int_term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.int_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def int_term(self) -> int:
        value = self.int_atom()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            value *= self.int_atom()
        return value

    def int_atom(self) -> int:
        tok = self.take()
        kind, val, _ = tok
        if kind == "int":
            return int(val)
        if kind == "op" and val == "-":
            return -self.int_atom()
        if kind == "op" and val == "(":
            value = self.int_expr()
            self.expect(")")
            return value
        if kind == "name" and val in self.params:
            return self.params[val]
        self.fail(tok)


def parse(text: str, params: Mapping[str, int] | None = None) -> QExpr:
    """Parse the text form into a :class:`QExpr`.

    Raises :class:`ParseError` naming the offending token.
    """
    p = _Parser(text, params or {})
    node = p.expr()
    if p.peek()[0] != "end":
        p.fail(p.peek())
    return node


# -- evaluation ------------------------------------------------------------

Series = Union[TruncatedSeries, LaurentSeries, ResidueSeries]


def _reduce(s, modulus):
    return s if modulus is None else s.reduce_mod(modulus)


def _eval(node: QExpr, W: int, modulus: int | None):
    if isinstance(node, IntConst):
        return _reduce(TruncatedSeries([node.value], W), modulus)
    if isinstance(node, Monomial):
        return _reduce(monomial(node.exponent, W, node.coefficient), modulus)
    if isinstance(node, EulerF):
        return _reduce(euler_f(node.n, W), modulus)
    if isinstance(node, Pochhammer):
        return _reduce(pochhammer(node.a, node.b, W, node.negated), modulus)
    if isinstance(node, ThetaF):
        return _reduce(theta_f(node.sign_a, node.r, node.sign_b, node.s, W),
                       modulus)
    if isinstance(node, Pow):
        return _eval(node.base, W, modulus) ** node.exponent
    if isinstance(node, _Binary):
        a = _eval(node.left, W, modulus)
        b = _eval(node.right, W, modulus)
        if isinstance(node, Add):
            return a + b
        if isinstance(node, Sub):
            return a - b
        if isinstance(node, Mul):
            return a * b
        return a / b
    raise TypeError(f"not a q-expression node: {node!r}")


def evaluate(expr: QExpr, N: int, modulus: int | None = None) -> Series:
    """Evaluate ``expr`` through ``q**N``.

    With ``modulus`` all arithmetic happens in ``Z/mZ``. Atoms are expanded
    with extra working precision when negative exponents in the tree would
    otherwise cost precision. The result is a power series unless negative
    exponents survive, in which case it is a :class:`LaurentSeries`.
    Division by a non-unit raises :class:`ZeroDivisionError`.
    """
    if N < 0:
        raise ValueError("precision must be nonnegative")
    W = N
    for _ in range(64):
        result = _eval(expr, W, modulus)
        if result.precision >= N:
            break
        W += N - result.precision
    else:  # pragma: no cover - every finite tree converges
        raise RuntimeError("working precision did not converge")
    result = result.truncate(N)
    if isinstance(result, LaurentSeries):
        v = result.valuation()
        if v is None or v >= 0:
            return result.to_truncated()
    return result
