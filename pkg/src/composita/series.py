"""Exact truncated power series over the rationals.

A :class:`Series` stores the coefficients of ``x^0 .. x^N``. Binary
operations truncate to the smaller of the two orders. Besides the usual
ring operations this module holds the "naive" algorithms (Cauchy product
powers, the reciprocal recurrence, Horner substitution, Newton reversion)
used as independent oracles for the composita formulas.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .errors import (
    NonzeroConstant,
    NonzeroInnerConstant,
    ZeroConstantTerm,
    ZeroLinearTerm,
)

DEFAULT_ORDER = 16

Coefficient = Fraction


def as_coefficient(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"coefficients must be int, Fraction or str, got {type(value).__name__}")


class Series:
    """A power series known through ``x^order``.

    Instances are immutable. Equality compares coefficients up to the
    smaller of the two orders, so series are deliberately unhashable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_coefficient(c) for c in coeffs]
        if order is None:
            if not cs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(cs) - 1
        if order < 0:
            raise ValueError("order must be non-negative")
        cs = cs[: order + 1]
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            raise IndexError(n)
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def has_zero_constant_term(self) -> bool:
        return self._coeffs[0] == 0

    def truncate(self, order: int) -> Series:
        return Series(self._coeffs, min(order, self.order))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        m = min(self.order, other.order)
        return self._coeffs[: m + 1] == other._coeffs[: m + 1]

    __hash__ = None

    def __repr__(self) -> str:
        return f"Series({[str(c) for c in self._coeffs]!r}, order={self.order})"

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mono = "" if n == 0 else ("x" if n == 1 else f"x^{n}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            elif mono:
                terms.append(f"{c}*{mono}")
            else:
                terms.append(str(c))
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(x^{self.order + 1})"

    def __add__(self, other):
        other = _coerce(other, self.order)
        return add(self, other) if other is not None else NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other, self.order)
        return sub(self, other) if other is not None else NotImplemented

    def __rsub__(self, other):
        other = _coerce(other, self.order)
        return sub(other, self) if other is not None else NotImplemented

    def __neg__(self) -> Series:
        return neg(self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(self, other)
        if isinstance(other, Series):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Series:
        return power(self, k)

    def __call__(self, inner: Series) -> Series:
        return compose_series(self, inner)


def _coerce(value, order: int) -> Series | None:
    if isinstance(value, Series):
        return value
    if isinstance(value, (int, Fraction)):
        return constant(value, order)
    return None


# -- constructors ----------------------------------------------------------


def zero(order: int = DEFAULT_ORDER) -> Series:
    return Series([], order)


def constant(c, order: int = DEFAULT_ORDER) -> Series:
    return Series([c], order)


def variable(order: int = DEFAULT_ORDER) -> Series:
    return Series([0, 1], order)


def monomial(n: int, c=1, order: int = DEFAULT_ORDER) -> Series:
    return Series([0] * n + [c], order)


def geometric(order: int = DEFAULT_ORDER) -> Series:
    """1/(1-x) truncated."""
    return Series([1] * (order + 1), order)


def log1p(order: int = DEFAULT_ORDER) -> Series:
    """ln(1+x) = sum (-1)^(n+1) x^n / n."""
    return Series([0] + [Fraction((-1) ** (n + 1), n) for n in range(1, order + 1)], order)


def expm1(order: int = DEFAULT_ORDER) -> Series:
    """e^x - 1 = sum x^n / n!."""
    return Series([0] + [Fraction(1, math.factorial(n)) for n in range(1, order + 1)], order)


def exp(order: int = DEFAULT_ORDER) -> Series:
    return Series([Fraction(1, math.factorial(n)) for n in range(order + 1)], order)


# -- ring operations -------------------------------------------------------


def add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a[i] + b[i] for i in range(n + 1)], n)


def sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order)
    return Series([a[i] - b[i] for i in range(n + 1)], n)


def neg(a: Series) -> Series:
    return Series([-c for c in a], a.order)


def scale(a: Series, c) -> Series:
    c = as_coefficient(c)
    return Series([c * v for v in a], a.order)


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return Series(out, n)


def power(a: Series, k: int) -> Series:
    """``a ** k`` by repeated multiplication; ``power(a, 0) == 1``."""
    if k < 0:
        raise ValueError("power needs a non-negative exponent; use reciprocal_series")
    result = constant(1, a.order)
    for _ in range(k):
        result = mul(result, a)
    return result


def shift(a: Series, by: int = 1) -> Series:
    """Multiply by ``x^by``; the order grows by ``by`` so nothing is lost."""
    return Series([0] * by + list(a.coeffs), a.order + by)


def derivative(a: Series) -> Series:
    if a.order == 0:
        return zero(0)
    return Series([n * a[n] for n in range(1, a.order + 1)], a.order - 1)


# -- oracle algorithms -----------------------------------------------------


def reciprocal_series(b: Series) -> Series:
    """The series ``a`` with ``a * b == 1``, by the triangular recurrence."""
    if b[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    inv0 = 1 / b[0]
    a = [inv0]
    for n in range(1, b.order + 1):
        s = sum((b[i] * a[n - i] for i in range(1, n + 1)), Fraction(0))
        a.append(-inv0 * s)
    return Series(a, b.order)


def compose_series(r: Series, f: Series) -> Series:
    """``r(f(x))`` by Horner substitution; ``f`` must vanish at 0."""
    if f[0] != 0:
        raise NonzeroInnerConstant("inner series of a composition must have zero constant term")
    n = min(r.order, f.order)
    f = f.truncate(n)
    acc = constant(r[n], n)
    for k in range(n - 1, -1, -1):
        acc = mul(acc, f)
        acc = Series([acc[0] + r[k]] + list(acc.coeffs[1:]), n)
    return acc


def _check_reversible(f: Series) -> None:
    if f[0] != 0:
        raise NonzeroConstant("reversion needs a zero constant term")
    if f.order < 1 or f[1] == 0:
        raise ZeroLinearTerm("reversion needs a nonzero linear coefficient")


def reversion_series_newton(f: Series) -> Series:
    """Compositional inverse of ``f`` by Newton iteration.

    Each step ``A <- A - (f(A) - x) / f'(A)`` doubles the number of correct
    coefficients, starting from ``A = x / f(1)``.
    """
    _check_reversible(f)
    n = f.order
    x = variable(n)
    df = derivative(f)
    a = Series([0, 1 / f[1]], n)
    correct = 1
    while correct < n:
        residual = compose_series(f, a) - x
        slope = compose_series(Series(df.coeffs, n), a)
        a = a - mul(residual, reciprocal_series(slope))
        correct *= 2
    return a


def reversion_series_solve(f: Series) -> Series:
    """Compositional inverse by order-by-order back substitution.

    Solves ``f(A(x)) = x`` one coefficient at a time: the coefficient of
    ``x^n`` in ``f(A)`` is ``f(1) * a(n)`` plus terms in lower ``a``.
    """
    _check_reversible(f)
    n = f.order
    a = Series([0, 1 / f[1]], n)
    for m in range(2, n + 1):
        err = compose_series(f, a)[m]
        coeffs = list(a.coeffs)
        coeffs[m] = -err / f[1]
        a = Series(coeffs, n)
    return a


def is_identity(s: Series) -> bool:
    """True when ``s`` equals ``x`` through its order."""
    return s == variable(s.order)
