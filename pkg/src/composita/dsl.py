"""A small expression language for generating functions.

Grammar::

    expr   := term { ("+" | "-") term }
    term   := factor { ("*" | "/") factor }
    factor := ["-"] base ["^" uint]
    base   := "x" | uint | uint "/" uint | "(" expr ")" | func "(" args ")"
    func   := "log1p" | "expm1" | "inv" | "rev" | "compose"

``a / b`` is read as ``a * inv(b)``. ``p/q`` with two integer literals is
a rational constant unless it directly follows a division or is raised to
a power, so ``x/1/2`` means ``(x/1)/2`` and ``1/2^2`` means ``1/4``.
Implicit multiplication (``2x``) is rejected.

Example::

    >>> evaluate_series(parse("rev(x - x^2)"), 5).coeffs[1:]
    (Fraction(1, 1), Fraction(1, 1), Fraction(2, 1), Fraction(5, 1), Fraction(14, 1))
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import series as ser
from . import transforms as tr
from . import triangle as tri
from .errors import (
    ExprSyntaxError,
    NonzeroConstant,
    NonzeroConstantTerm,
    NonzeroInnerConstant,
    PreconditionError,
    ZeroConstantTerm,
    ZeroLinearTerm,
)
from .series import Series
from .triangle import Composita

# -- AST -------------------------------------------------------------------


@dataclass(frozen=True)
class Variable:
    pass


@dataclass(frozen=True)
class Constant:
    value: Fraction


@dataclass(frozen=True)
class Add:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Sub:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int

    def __post_init__(self):
        if self.exponent < 1:
            raise ValueError("exponent must be a positive integer")


@dataclass(frozen=True)
class Log1p:
    arg: "Expr"


@dataclass(frozen=True)
class Expm1:
    arg: "Expr"


@dataclass(frozen=True)
class Inv:
    arg: "Expr"


@dataclass(frozen=True)
class Rev:
    arg: "Expr"


@dataclass(frozen=True)
class Compose:
    outer: "Expr"
    inner: "Expr"


Expr = Union[Variable, Constant, Add, Sub, Neg, Mul, Pow, Log1p, Expm1, Inv, Rev, Compose]
GFExpression = Expr

_UNARY_FUNCS = {"log1p": Log1p, "expm1": Expm1, "inv": Inv, "rev": Rev}
FUNCTIONS = frozenset(_UNARY_FUNCS) | {"compose"}

# -- tokenizer -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^(),]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "num", "name", "op", "eof"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if not rest.strip():
                tokens.append(_Tok("eof", "", len(text)))
                return tokens
            bad = pos + len(rest) - len(rest.lstrip())
            raise ExprSyntaxError(
                f"unexpected character {text[bad]!r}", text, _byte_offset(text, bad)
            )
        kind = m.lastgroup
        tokens.append(_Tok(kind, m.group(kind), m.start(kind)))
        pos = m.end()


def _byte_offset(text: str, char_pos: int) -> int:
    return len(text[:char_pos].encode("utf-8"))


# -- parser ----------------------------------------------------------------


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.tokens[self.i]

    def peek(self, ahead: int = 1) -> _Tok:
        return self.tokens[min(self.i + ahead, len(self.tokens) - 1)]

    def error(self, message: str, expected=(), tok: _Tok | None = None) -> ExprSyntaxError:
        tok = tok or self.tok
        return ExprSyntaxError(message, self.text, _byte_offset(self.text, tok.pos), expected)

    def accept(self, op: str) -> bool:
        if self.tok.kind == "op" and self.tok.text == op:
            self.i += 1
            return True
        return False

    def expect(self, op: str) -> None:
        if not self.accept(op):
            raise self.error(f"expected {op!r}, found {self._describe()}", {op})

    def _describe(self) -> str:
        return "end of input" if self.tok.kind == "eof" else repr(self.tok.text)

    def parse(self) -> Expr:
        node = self.expr()
        if self.tok.kind != "eof":
            raise self.error(
                f"unexpected {self._describe()}", {"+", "-", "*", "/", "^", "end of input"}
            )
        return node

    def expr(self) -> Expr:
        node = self.term()
        while True:
            if self.accept("+"):
                node = Add(node, self.term())
            elif self.accept("-"):
                node = Sub(node, self.term())
            else:
                return node

    def term(self) -> Expr:
        node = self.factor(after_div=False)
        while True:
            if self.accept("*"):
                node = Mul(node, self.factor(after_div=False))
            elif self.accept("/"):
                node = Mul(node, Inv(self.factor(after_div=True)))
            else:
                return node

    def factor(self, after_div: bool) -> Expr:
        negate = self.accept("-")
        node = self.base(after_div)
        if self.accept("^"):
            tok = self.tok
            if tok.kind != "num":
                raise self.error("exponent must be a non-negative integer literal", {"uint"})
            self.i += 1
            exponent = int(tok.text)
            if exponent < 1:
                raise self.error("exponent must be at least 1", {"uint >= 1"}, tok)
            node = Pow(node, exponent)
        return Neg(node) if negate else node

    def base(self, after_div: bool) -> Expr:
        tok = self.tok
        if tok.kind == "num":
            self.i += 1
            if (
                not after_div
                and self.tok.kind == "op"
                and self.tok.text == "/"
                and self.peek().kind == "num"
                and not (self.peek(2).kind == "op" and self.peek(2).text == "^")
            ):
                self.i += 1
                den = self.tok
                self.i += 1
                if int(den.text) == 0:
                    raise self.error("zero denominator in rational literal", (), den)
                return Constant(Fraction(int(tok.text), int(den.text)))
            return Constant(Fraction(int(tok.text)))
        if tok.kind == "name":
            if tok.text == "x":
                self.i += 1
                return Variable()
            if tok.text in FUNCTIONS:
                self.i += 1
                self.expect("(")
                first = self.expr()
                if tok.text == "compose":
                    self.expect(",")
                    second = self.expr()
                    self.expect(")")
                    return Compose(first, second)
                self.expect(")")
                return _UNARY_FUNCS[tok.text](first)
            raise self.error(f"unknown name {tok.text!r}", {"x", *sorted(FUNCTIONS)})
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        raise self.error(
            f"unexpected {self._describe()}", {"x", "uint", "(", "-", *sorted(FUNCTIONS)}
        )


def parse(text: str) -> Expr:
    """Parse expression text into an AST; raises :class:`ExprSyntaxError`."""
    return _Parser(text).parse()


# -- printer ---------------------------------------------------------------

_SUM, _PRODUCT, _NEG, _POW, _ATOM = range(1, 6)


def _level(e: Expr) -> int:
    if isinstance(e, (Add, Sub)):
        return _SUM
    if isinstance(e, Mul):
        return _PRODUCT
    if isinstance(e, Neg):
        return _NEG
    if isinstance(e, Pow):
        return _POW
    return _ATOM


def _wrap(e: Expr, min_level: int) -> str:
    s = to_text(e)
    return s if _level(e) >= min_level else f"({s})"


def to_text(e: Expr) -> str:
    """Render an AST so that ``parse(to_text(e)) == e`` for parsed trees."""
    if isinstance(e, Variable):
        return "x"
    if isinstance(e, Constant):
        v = e.value
        if v.denominator == 1 and v >= 0:
            return str(v.numerator)
        return f"({v})"
    if isinstance(e, Add):
        return f"{_wrap(e.left, _SUM)} + {_wrap(e.right, _PRODUCT)}"
    if isinstance(e, Sub):
        return f"{_wrap(e.left, _SUM)} - {_wrap(e.right, _PRODUCT)}"
    if isinstance(e, Mul):
        return f"{_wrap(e.left, _PRODUCT)}*{_wrap(e.right, _NEG)}"
    if isinstance(e, Neg):
        return f"-{_wrap(e.arg, _POW)}"
    if isinstance(e, Pow):
        return f"{_wrap(e.base, _ATOM)}^{e.exponent}"
    if isinstance(e, Compose):
        return f"compose({to_text(e.outer)}, {to_text(e.inner)})"
    for name, cls in _UNARY_FUNCS.items():
        if isinstance(e, cls):
            return f"{name}({to_text(e.arg)})"
    raise TypeError(f"not an expression node: {e!r}")


# -- series evaluation -----------------------------------------------------


def _fail(exc: type[PreconditionError], message: str, node: Expr) -> PreconditionError:
    err = exc(message)
    err.subexpression = to_text(node)
    return err


def evaluate_series(e: Expr, N: int = ser.DEFAULT_ORDER) -> Series:
    """Exact series of ``e`` through ``x^N``."""
    if isinstance(e, Variable):
        return ser.variable(N)
    if isinstance(e, Constant):
        return ser.constant(e.value, N)
    if isinstance(e, Add):
        return ser.add(evaluate_series(e.left, N), evaluate_series(e.right, N))
    if isinstance(e, Sub):
        return ser.sub(evaluate_series(e.left, N), evaluate_series(e.right, N))
    if isinstance(e, Neg):
        return ser.neg(evaluate_series(e.arg, N))
    if isinstance(e, Mul):
        return ser.mul(evaluate_series(e.left, N), evaluate_series(e.right, N))
    if isinstance(e, Pow):
        return ser.power(evaluate_series(e.base, N), e.exponent)
    if isinstance(e, (Log1p, Expm1)):
        inner = evaluate_series(e.arg, N)
        if inner[0] != 0:
            raise _fail(NonzeroInnerConstant, "argument must have zero constant term", e)
        outer = ser.log1p(N) if isinstance(e, Log1p) else ser.expm1(N)
        return ser.compose_series(outer, inner)
    if isinstance(e, Inv):
        b = evaluate_series(e.arg, N)
        if b[0] == 0:
            raise _fail(ZeroConstantTerm, "reciprocal of a series with zero constant term", e)
        return ser.reciprocal_series(b)
    if isinstance(e, Rev):
        f = evaluate_series(e.arg, max(N, 1))
        if f[0] != 0:
            raise _fail(NonzeroConstant, "reversion needs a zero constant term", e)
        if f[1] == 0:
            raise _fail(ZeroLinearTerm, "reversion needs a nonzero linear coefficient", e)
        return ser.reversion_series_newton(f).truncate(N)
    if isinstance(e, Compose):
        inner = evaluate_series(e.inner, N)
        if inner[0] != 0:
            raise _fail(NonzeroInnerConstant, "inner function must have zero constant term", e)
        return ser.compose_series(evaluate_series(e.outer, N), inner)
    raise TypeError(f"not an expression node: {e!r}")


# -- composita evaluation --------------------------------------------------


def _constant_term(e: Expr) -> Fraction:
    return evaluate_series(e, 1)[0]


def evaluate_composita(e: Expr, N: int = ser.DEFAULT_ORDER, structural: bool = True) -> Composita:
    """Composita of ``e`` with ``N`` rows.

    With ``structural`` set, scaling, sums, products with a series,
    powers, compositions, reciprocals (``x*inv(b)``) and reversions are
    combined from the compositae of their parts; anything else falls back
    to the column recurrence on the evaluated series. Both routes give
    identical triangles.
    """
    if _constant_term(e) != 0:
        raise _fail(NonzeroConstantTerm, "composita needs a zero constant term", e)
    if structural:
        t = _structural(e, N)
        if t is not None:
            return t
    return tri.composita_by_powers(evaluate_series(e, N), N)


def _structural(e: Expr, N: int) -> Composita | None:
    if isinstance(e, Variable):
        return tri.identity_composita(N)
    if isinstance(e, Neg):
        return tri.composita_scale(evaluate_composita(e.arg, N), -1)
    if isinstance(e, (Add, Sub)):
        if _constant_term(e.left) != 0 or _constant_term(e.right) != 0:
            return None
        right = evaluate_composita(e.right, N)
        if isinstance(e, Sub):
            right = tri.composita_scale(right, -1)
        return tri.composita_sum(evaluate_composita(e.left, N), right)
    if isinstance(e, Mul):
        for a, b in ((e.left, e.right), (e.right, e.left)):
            if isinstance(b, Constant) and _constant_term(a) == 0:
                return tri.composita_scale(evaluate_composita(a, N), b.value)
        if isinstance(e.left, Variable) and isinstance(e.right, Inv):
            rows = max(1, 2 * (N - 1))
            tB = evaluate_composita(Mul(Variable(), e.right.arg), rows)
            return tr.reciprocal_composita(tB, N)
        for a, b in ((e.left, e.right), (e.right, e.left)):
            if _constant_term(a) == 0:
                return tri.composita_product_with_series(
                    evaluate_composita(a, N), evaluate_series(b, N)
                )
        return None
    if isinstance(e, Pow):
        return tri.composita_of_power(evaluate_composita(e.base, N), e.exponent)
    if isinstance(e, (Log1p, Expm1)):
        family = tri.ClosedFormFamily("log1p" if isinstance(e, Log1p) else "expm1")
        outer = tri.closed_form_composita(family, N)
        if isinstance(e.arg, Variable):
            return outer
        return tri.composita_of_composition(outer, evaluate_composita(e.arg, N))
    if isinstance(e, Compose):
        if _constant_term(e.inner) != 0:
            raise _fail(NonzeroInnerConstant, "inner function must have zero constant term", e)
        return tri.composita_of_composition(
            evaluate_composita(e.outer, N), evaluate_composita(e.inner, N)
        )
    if isinstance(e, Rev):
        tF = evaluate_composita(e.arg, max(1, 2 * (N - 1)))
        if tF[1, 1] == 0:
            raise _fail(ZeroLinearTerm, "reversion needs a nonzero linear coefficient", e)
        return tr.reversion_composita(tF, N)
    return None
