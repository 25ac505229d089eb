"""Composition, reciprocal and reversion expressed through compositae.

Every formula here has a naive counterpart in :mod:`composita.series`;
the tests check one against the other.
"""

from __future__ import annotations

from fractions import Fraction

from . import series as ser
from .errors import (
    InsufficientRows,
    LinearTermNotOne,
    ResidualNonzero,
    ShapeMismatch,
    ZeroLeadingEntry,
    ZeroLinearTerm,
    ZeroR0,
)
from .series import Series
from .special import binomial
from .triangle import Composita, composita_by_powers


def compose_coefficients(tF: Composita, r: Series) -> Series:
    """Coefficients of ``R(F(x))``: ``a(0) = r(0)``, ``a(n) = sum_k F^D(n,k) r(k)``."""
    N = tF.max_row
    if r.order < N:
        raise ShapeMismatch(f"outer series known through x^{r.order}, need x^{N}")
    out = [r[0]]
    for n in range(1, N + 1):
        out.append(sum((tF[n, k] * r[k] for k in range(1, n + 1)), Fraction(0)))
    return Series(out, N)


class PowerTable:
    """``R(k, m) = [x^k] R(x)^m`` for ``0 <= k <= N`` and ``0 <= m <= N``."""

    __slots__ = ("_powers",)

    def __init__(self, powers: list[Series]):
        self._powers = tuple(powers)

    @property
    def size(self) -> int:
        return len(self._powers) - 1

    def __getitem__(self, km: tuple[int, int]) -> Fraction:
        k, m = km
        if k < 0:
            return Fraction(0)
        return self._powers[m][k]

    def power(self, m: int) -> Series:
        return self._powers[m]


def power_table(r: Series, N: int) -> PowerTable:
    if r.order < N:
        raise ShapeMismatch(f"series known through x^{r.order}, need x^{N}")
    r = r.truncate(N)
    powers = [ser.constant(1, N)]
    for _ in range(N):
        powers.append(ser.mul(powers[-1], r))
    return PowerTable(powers)


def composita_x_r_of_f(rt: PowerTable, tF: Composita) -> Composita:
    """Composita of ``A(x) = x R(F(x))`` with ``R(0) != 0``.

    ``A(n, n) = r(0)^n``; below the diagonal
    ``A(n, m) = sum_{k=1}^{n-m} F^D(n-m, k) R(k, m)``.
    """
    r0 = rt[0, 1] if rt.size >= 1 else Fraction(0)
    if r0 == 0:
        raise ZeroR0("x R(F(x)) needs R(0) != 0")
    N = min(tF.max_row + 1, rt.size)

    def entry(n: int, m: int) -> Fraction:
        if n == m:
            return r0**n
        p = n - m
        return sum((tF[p, k] * rt[k, m] for k in range(1, p + 1)), Fraction(0))

    return Composita.from_function(N, entry)


def _alternating_inner(tB: Composita, p: int, k: int, inv_lead: Fraction) -> Fraction:
    # sum_{j=1}^{k} (-1)^j inv_lead^j C(k, j) B^D(p + j, j)
    total = Fraction(0)
    for j in range(1, k + 1):
        term = binomial(k, j) * inv_lead**j * tB[p + j, j]
        total += -term if j % 2 else term
    return total


def _rows_for(tB: Composita, rows: int | None) -> int:
    # entry (n, m) reads B^D up to row 2(n - m) <= 2(rows - 1)
    available = tB.max_row // 2 + 1
    if rows is None:
        return available
    if rows > available:
        raise InsufficientRows(
            f"{rows} rows need a source triangle with {2 * (rows - 1)} rows, got {tB.max_row}"
        )
    return rows


def reciprocal_composita(tB: Composita, rows: int | None = None) -> Composita:
    """Composita of ``x A(x)`` where ``A = 1/B``, given the composita of ``x B(x)``.

    With ``b0 = B^D(1,1)``: the diagonal is ``b0^-m`` and for ``n > m``

        A^D(n, m) = b0^-m sum_{k=1}^{n-m} C(m+k-1, m-1)
                    sum_{j=1}^{k} (-1)^j b0^-j C(k, j) B^D(n-m+j, j).
    """
    b0 = tB[1, 1]
    if b0 == 0:
        raise ZeroLeadingEntry("reciprocal needs B(0) = B^D(1,1) != 0")
    N = _rows_for(tB, rows)
    inv = 1 / b0

    def entry(n: int, m: int) -> Fraction:
        if n == m:
            return inv**m
        p = n - m
        total = Fraction(0)
        for k in range(1, p + 1):
            total += binomial(m + k - 1, m - 1) * _alternating_inner(tB, p, k, inv)
        return inv**m * total

    return Composita.from_function(N, entry)


def lagrange_composita(tG: Composita, N: int | None = None) -> Composita:
    """Composita of the solution of ``A = x H(A)`` from the composita of ``x H(x)``.

    ``A^D(n, k) = (k / n) G^D(2n - k, n)``.
    """
    available = (tG.max_row + 1) // 2
    if N is None:
        N = available
    elif 2 * N - 1 > tG.max_row:
        raise InsufficientRows(f"{N} rows need {2 * N - 1} source rows, got {tG.max_row}")
    return Composita.from_function(N, lambda n, k: Fraction(k, n) * tG[2 * n - k, n])


def reversion_composita(tF: Composita, rows: int | None = None) -> Composita:
    """Composita of the compositional inverse of ``F``.

    With ``f1 = F^D(1,1)``: the diagonal is ``f1^-n`` and for ``n > m``

        A^D(n, m) = m / (n f1^n) sum_{k=1}^{n-m} C(n+k-1, n-1)
                    sum_{j=1}^{k} (-1)^j f1^-j C(k, j) F^D(n-m+j, j).
    """
    f1 = tF[1, 1]
    if f1 == 0:
        raise ZeroLinearTerm("reversion needs f(1) != 0")
    N = _rows_for(tF, rows)
    inv = 1 / f1

    def entry(n: int, m: int) -> Fraction:
        if n == m:
            return inv**n
        p = n - m
        total = Fraction(0)
        for k in range(1, p + 1):
            total += binomial(n + k - 1, n - 1) * _alternating_inner(tF, p, k, inv)
        return Fraction(m, n) * inv**n * total

    return Composita.from_function(N, entry)


def reverse_coefficients(tF: Composita, order: int | None = None) -> Series:
    """Coefficients of the inverse of ``F`` when ``f(1) = 1``.

    ``a(1) = 1`` and for ``n > 1``

        a(n) = 1/n sum_{k=1}^{n-1} C(n+k-1, n-1)
               sum_{j=1}^{k} (-1)^j C(k, j) F^D(n+j-1, j).

    For other nonzero ``f(1)`` use row 1 of :func:`reversion_composita`.
    """
    if tF[1, 1] != 1:
        raise LinearTermNotOne(f"f(1) = {tF[1, 1]}; use reversion_composita for f(1) != 1")
    N = _rows_for(tF, order)
    out = [Fraction(0), Fraction(1)]
    for n in range(2, N + 1):
        total = Fraction(0)
        for k in range(1, n):
            inner = Fraction(0)
            for j in range(1, k + 1):
                term = binomial(k, j) * tF[n + j - 1, j]
                inner += -term if j % 2 else term
            total += binomial(n + k - 1, n - 1) * inner
        out.append(total / n)
    return Series(out[: N + 1], N)


# -- series-level conveniences ----------------------------------------------


def reverse_series(f: Series, order: int | None = None) -> Series:
    """Compositional inverse of ``f`` through ``x^order`` via the reversion composita."""
    if order is None:
        order = f.order // 2 + 1
    if f[0] != 0:
        raise ser.NonzeroConstant("reversion needs a zero constant term")
    if f.order < 1 or f[1] == 0:
        raise ZeroLinearTerm("reversion needs a nonzero linear coefficient")
    need = max(1, 2 * order - 2)
    if f.order < need:
        raise InsufficientRows(f"inverse through x^{order} needs f through x^{need}")
    tF = composita_by_powers(f, need)
    if f[1] == 1:
        return reverse_coefficients(tF, order)
    return reversion_composita(tF, order).series(1)


def reciprocal_via_composita(b: Series, order: int | None = None) -> Series:
    """``1/b`` through ``x^order`` via the reciprocal composita of ``x b(x)``."""
    if order is None:
        order = (b.order + 1) // 2
    if b[0] == 0:
        raise ser.ZeroConstantTerm("reciprocal needs a nonzero constant term")
    need = max(1, 2 * order)
    if b.order + 1 < need:
        raise InsufficientRows(f"reciprocal through x^{order} needs b through x^{need - 1}")
    tB = composita_by_powers(ser.shift(b).truncate(need), need)
    xa = reciprocal_composita(tB, order + 1).series(1)
    return Series(xa.coeffs[1:], order)


def solve_functional(F, G, N: int = ser.DEFAULT_ORDER) -> Series:
    """Solve ``F(A(x)) = G(x)`` for ``A`` through ``x^N``.

    ``F`` and ``G`` may be expressions, expression text, or series known to
    at least ``x^(2N-2)`` and ``x^N`` respectively. ``A`` is the composition
    of the inverse of ``F`` with ``G``, assembled from compositae and then
    checked by substituting back into ``F``.
    """
    f = _as_series(F, max(N, 2 * N - 2))
    g = _as_series(G, N)
    if g[0] != 0:
        raise ser.NonzeroInnerConstant("right-hand side must have zero constant term")
    inverse = reverse_series(f, N)
    tG = composita_by_powers(g.truncate(N), N)
    a = compose_coefficients(tG, inverse)
    if ser.compose_series(f.truncate(N), a) != g.truncate(N):
        raise ResidualNonzero("F(A(x)) - G(x) does not vanish through the requested order")
    return a


def _as_series(value, order: int) -> Series:
    if isinstance(value, Series):
        if value.order < order:
            raise InsufficientRows(f"series known through x^{value.order}, need x^{order}")
        return value
    from .dsl import evaluate_series, parse

    expr = parse(value) if isinstance(value, str) else value
    return evaluate_series(expr, order)
