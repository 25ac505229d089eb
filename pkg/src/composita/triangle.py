"""Composita triangles and the rules for building and combining them.

The composita of a series F with F(0) = 0 is the table

    F^D(n, k) = [x^n] F(x)^k,      1 <= k <= n <= N,

equivalently the sum over all compositions of n into k parts of the
products of the corresponding coefficients of F.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator

from . import series as ser
from .errors import (
    InvalidParameter,
    NonzeroConstantTerm,
    RowOutOfRange,
    ShapeMismatch,
)
from .series import Series
from .special import binomial, stirling1_signed, stirling2

COMPOSITIONS_CAP = 12


class Composita:
    """Immutable triangle of entries ``F^D(n, k)`` for ``1 <= k <= n <= max_row``.

    Reads outside the stored triangle follow two conventions: column 0 is
    ``delta(n, 0)`` (the composita of ``F^0 = 1``) and everything else out
    of range is zero.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows):
        rows = tuple(tuple(ser.as_coefficient(v) for v in row) for row in rows)
        for n, row in enumerate(rows, start=1):
            if len(row) != n:
                raise ShapeMismatch(f"row {n} has {len(row)} entries, expected {n}")
        self._rows = rows

    @classmethod
    def from_function(cls, max_row: int, entry: Callable[[int, int], Fraction]) -> Composita:
        return cls([entry(n, k) for k in range(1, n + 1)] for n in range(1, max_row + 1))

    @property
    def max_row(self) -> int:
        return len(self._rows)

    def __getitem__(self, nk: tuple[int, int]) -> Fraction:
        n, k = nk
        if k == 0:
            return Fraction(1) if n == 0 else Fraction(0)
        if 1 <= k <= n <= len(self._rows):
            return self._rows[n - 1][k - 1]
        if n > len(self._rows) and k >= 1:
            raise RowOutOfRange(f"row {n} requested from a triangle with {len(self._rows)} rows")
        return Fraction(0)

    def row(self, n: int) -> tuple[Fraction, ...]:
        if not 1 <= n <= self.max_row:
            raise RowOutOfRange(f"row {n} outside 1..{self.max_row}")
        return self._rows[n - 1]

    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __iter__(self) -> Iterator[tuple[int, int, Fraction]]:
        for n, row in enumerate(self._rows, start=1):
            for k, v in enumerate(row, start=1):
                yield n, k, v

    def truncate(self, max_row: int) -> Composita:
        return Composita(self._rows[:max_row])

    def series(self, k: int = 1) -> Series:
        return series_from_composita(self, k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Composita):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"Composita(max_row={self.max_row})"

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self._rows)


def _require_zero_constant(f: Series, N: int) -> None:
    if f[0] != 0:
        raise NonzeroConstantTerm("composita needs a series with zero constant term")
    if N > f.order:
        raise RowOutOfRange(f"{N} rows requested from a series known only through x^{f.order}")


def compositions(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """All ordered k-tuples of positive integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def composita_by_compositions(f: Series, N: int) -> Composita:
    """Composita straight from the definition; exponential, so N <= 12."""
    _require_zero_constant(f, N)
    if N > COMPOSITIONS_CAP:
        raise ValueError(f"enumeration is capped at {COMPOSITIONS_CAP} rows")

    def entry(n: int, k: int) -> Fraction:
        total = Fraction(0)
        for parts in compositions(n, k):
            term = Fraction(1)
            for p in parts:
                term *= f[p]
                if not term:
                    break
            total += term
        return total

    return Composita.from_function(N, entry)


def composita_by_powers(f: Series, N: int | None = None) -> Composita:
    """Composita by column convolution.

    ``F^D(n, 1) = f(n)`` and ``F^D(n, k) = sum_i f(i) F^D(n-i, k-1)``,
    which is the coefficient extraction of ``F^k = F * F^(k-1)``.
    """
    if N is None:
        N = f.order
    _require_zero_constant(f, N)
    table = [[Fraction(0)] * (n + 1) for n in range(N + 1)]
    for n in range(1, N + 1):
        table[n][1] = f[n]
    for k in range(2, N + 1):
        for n in range(k, N + 1):
            s = Fraction(0)
            for i in range(1, n - k + 2):
                if f[i]:
                    s += f[i] * table[n - i][k - 1]
            table[n][k] = s
    return Composita(table[n][1:] for n in range(1, N + 1))


def series_from_composita(t: Composita, k: int) -> Series:
    """Rebuild ``F^k = sum_{n>=k} F^D(n, k) x^n`` through ``x^max_row``."""
    if not 1 <= k <= t.max_row:
        raise RowOutOfRange(f"power {k} outside 1..{t.max_row}")
    return Series([0] * k + [t[n, k] for n in range(k, t.max_row + 1)], t.max_row)


def identity_composita(N: int) -> Composita:
    """Composita of ``x``: the delta triangle."""
    return Composita.from_function(N, lambda n, k: Fraction(int(n == k)))


# -- closed forms ----------------------------------------------------------

FAMILIES = ("linear_quadratic", "rational_bx_over_1_plus_ax", "log1p", "expm1", "geometric")
_PARAMETRIC = {"linear_quadratic", "rational_bx_over_1_plus_ax"}


@dataclass(frozen=True)
class ClosedFormFamily:
    """A series with a known closed-form composita.

    ``linear_quadratic`` is ``a x + b x^2``, ``rational_bx_over_1_plus_ax``
    is ``b x / (1 + a x)``; the other three families take no parameters.
    """

    tag: str
    a: Fraction | None = None
    b: Fraction | None = None

    def __post_init__(self):
        if self.tag not in FAMILIES:
            raise InvalidParameter(f"unknown family {self.tag!r}")
        if self.tag in _PARAMETRIC:
            if self.a is None or self.b is None:
                raise InvalidParameter(f"{self.tag} needs parameters a and b")
            object.__setattr__(self, "a", ser.as_coefficient(self.a))
            object.__setattr__(self, "b", ser.as_coefficient(self.b))
        elif self.a is not None or self.b is not None:
            raise InvalidParameter(f"{self.tag} takes no parameters")

    def entry(self, n: int, k: int) -> Fraction:
        if not 1 <= k <= n:
            return Fraction(0)
        a, b = self.a, self.b
        if self.tag == "linear_quadratic":
            c = binomial(k, n - k)
            return c * a ** (2 * k - n) * b ** (n - k) if c else Fraction(0)
        if self.tag == "rational_bx_over_1_plus_ax":
            sign = -1 if (n + k) % 2 else 1
            return sign * binomial(n - 1, k - 1) * a ** (n - k) * b**k
        if self.tag == "log1p":
            return Fraction(math.factorial(k) * stirling1_signed(n, k), math.factorial(n))
        if self.tag == "expm1":
            return Fraction(math.factorial(k) * stirling2(n, k), math.factorial(n))
        return Fraction(binomial(n - 1, k - 1))

    def series(self, order: int = ser.DEFAULT_ORDER) -> Series:
        """The generating function itself, truncated at ``x^order``."""
        if self.tag == "linear_quadratic":
            return Series([0, self.a, self.b], order)
        if self.tag == "rational_bx_over_1_plus_ax":
            return Series([0] + [self.b * (-self.a) ** (n - 1) for n in range(1, order + 1)], order)
        if self.tag == "log1p":
            return ser.log1p(order)
        if self.tag == "expm1":
            return ser.expm1(order)
        return Series([0] + [1] * order, order)


def closed_form_composita(family: ClosedFormFamily, N: int) -> Composita:
    return Composita.from_function(N, family.entry)


# -- algebra of compositae -------------------------------------------------


def composita_scale(t: Composita, c) -> Composita:
    """Composita of ``c F``: entry (n, k) picks up a factor ``c^k``."""
    c = ser.as_coefficient(c)
    return Composita([c**k * v for k, v in enumerate(row, start=1)] for row in t.rows())


def _power_product(tF: Composita, l: int, tG: Composita, m: int, n: int) -> Fraction:
    # [x^n] F^l G^m with F^0 = G^0 = 1
    return sum((tF[i, l] * tG[n - i, m] for i in range(n + 1)), Fraction(0))


def composita_sum(tF: Composita, tG: Composita) -> Composita:
    """Composita of ``F + G`` from the binomial expansion of ``(F + G)^k``."""
    if tF.max_row != tG.max_row:
        raise ShapeMismatch(f"triangles have {tF.max_row} and {tG.max_row} rows")

    def entry(n: int, k: int) -> Fraction:
        return sum(
            (binomial(k, l) * _power_product(tF, l, tG, k - l, n) for l in range(k + 1)),
            Fraction(0),
        )

    return Composita.from_function(tF.max_row, entry)


def composita_product_with_series(tF: Composita, b: Series) -> Composita:
    """Composita of ``F(x) b(x)``, using ``(F b)^k = F^k b^k``."""
    N = tF.max_row
    if b.order < N - 1:
        raise ShapeMismatch(f"multiplier known through x^{b.order}, need x^{N - 1}")
    b = b.truncate(N)
    bk = ser.constant(1, b.order)
    rows: list[list[Fraction]] = [[] for _ in range(N)]
    for k in range(1, N + 1):
        bk = ser.mul(bk, b)
        for n in range(k, N + 1):
            rows[n - 1].append(sum((tF[i, k] * bk[n - i] for i in range(k, n + 1)), Fraction(0)))
    return Composita(rows)


def composita_of_power(tF: Composita, p: int) -> Composita:
    """Composita of ``F^p``: entry (n, k) is ``F^D(n, p k)``."""
    if p < 1:
        raise InvalidParameter("power must be positive")
    return Composita.from_function(tF.max_row, lambda n, k: tF[n, p * k])


def composita_of_composition(tR: Composita, tF: Composita) -> Composita:
    """Composita of ``R(F(x))`` for ``R(0) = F(0) = 0``.

    ``[x^n] R(F)^k = sum_j F^D(n, j) R^D(j, k)``.
    """
    if tF.max_row != tR.max_row:
        raise ShapeMismatch(f"triangles have {tR.max_row} and {tF.max_row} rows")
    return Composita.from_function(
        tF.max_row,
        lambda n, k: sum((tF[n, j] * tR[j, k] for j in range(k, n + 1)), Fraction(0)),
    )
