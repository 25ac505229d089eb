from fractions import Fraction

import pytest

from composita import series as ser
from composita.errors import InvalidParameter, NonzeroConstantTerm, RowOutOfRange, ShapeMismatch
from composita.series import Series
from composita.special import binomial, stirling1_signed, stirling1_unsigned
from composita.triangle import (
    FAMILIES,
    ClosedFormFamily,
    Composita,
    closed_form_composita,
    composita_by_compositions,
    composita_by_powers,
    composita_of_composition,
    composita_of_power,
    composita_product_with_series,
    composita_scale,
    composita_sum,
    compositions,
    identity_composita,
    series_from_composita,
)

from conftest import corpus, load_fixture


def test_compositions_enumeration():
    assert sorted(compositions(4, 2)) == [(1, 3), (2, 2), (3, 1)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(3, 4)) == []
    for n in range(1, 9):
        assert sum(1 for k in range(1, n + 1) for _ in compositions(n, k)) == 2 ** (n - 1)


def test_by_compositions_examples():
    geo = Series([0] + [1] * 10)
    assert composita_by_compositions(geo, 10)[4, 2] == 3
    f = Series([0, 2, 5, -1], 8)
    t = composita_by_compositions(f, 8)
    assert all(t[n, n] == 2**n for n in range(1, 9))
    assert composita_by_compositions(Series([0, 1, 1], 6), 6)[5, 3] == 3


def test_by_powers_examples():
    assert composita_by_powers(ser.expm1(6), 6)[3, 2] == 1
    assert composita_by_powers(ser.log1p(6), 6)[3, 2] == -1
    assert composita_by_powers(ser.variable(7), 7) == identity_composita(7)


def test_pascal_fixture():
    t = composita_by_powers(Series([0] + [1] * 10), 10)
    assert [[int(v) for v in t.row(n)] for n in range(1, 11)] == load_fixture("pascal.txt")


@pytest.mark.parametrize("name,f", corpus(10).items())
def test_definitional_equivalence(name, f):
    assert composita_by_compositions(f, 10) == composita_by_powers(f, 10)


@pytest.mark.parametrize("name,f", corpus(12).items())
def test_boundary_laws(name, f):
    t = composita_by_powers(f, 12)
    for n in range(1, 13):
        assert t[n, 1] == f[n]
        assert t[n, n] == f[1] ** n


@pytest.mark.parametrize("name,f", corpus(9).items())
def test_round_trip_to_powers(name, f):
    t = composita_by_powers(f, 9)
    for k in range(1, 10):
        assert series_from_composita(t, k) == ser.power(f, k)


def test_series_from_composita_examples():
    t = composita_by_powers(Series([0] + [1] * 6), 6)
    assert t.series(1).coeffs == (0, 1, 1, 1, 1, 1, 1)
    assert series_from_composita(t, 6) == ser.monomial(6, 1, 6)
    with pytest.raises(RowOutOfRange):
        series_from_composita(t, 7)


def test_nonzero_constant_rejected():
    with pytest.raises(NonzeroConstantTerm):
        composita_by_powers(Series([1, 1], 4), 4)
    with pytest.raises(NonzeroConstantTerm):
        composita_by_compositions(Series([1, 1], 4), 4)


def test_out_of_range_reads():
    t = identity_composita(4)
    assert t[0, 0] == 1
    assert t[3, 0] == 0
    assert t[2, 3] == 0
    assert t[-1, 2] == 0
    with pytest.raises(RowOutOfRange):
        t[5, 1]


def test_shape_is_validated():
    with pytest.raises(ShapeMismatch):
        Composita([[1], [1]])


FAMILY_CASES = [
    ClosedFormFamily("linear_quadratic", 1, 1),
    ClosedFormFamily("linear_quadratic", 2, -3),
    ClosedFormFamily("linear_quadratic", Fraction(1, 2), 5),
    ClosedFormFamily("rational_bx_over_1_plus_ax", 1, 1),
    ClosedFormFamily("rational_bx_over_1_plus_ax", -2, 3),
    ClosedFormFamily("rational_bx_over_1_plus_ax", Fraction(2, 3), Fraction(-1, 2)),
    ClosedFormFamily("log1p"),
    ClosedFormFamily("expm1"),
    ClosedFormFamily("geometric"),
]


@pytest.mark.parametrize("family", FAMILY_CASES, ids=lambda f: f"{f.tag}-{f.a}-{f.b}")
def test_closed_forms_match_powers(family):
    assert closed_form_composita(family, 15) == composita_by_powers(family.series(15), 15)


def test_closed_form_examples():
    assert closed_form_composita(ClosedFormFamily("linear_quadratic", 1, 1), 5)[5, 3] == 3
    assert closed_form_composita(ClosedFormFamily("rational_bx_over_1_plus_ax", 1, 1), 3)[3, 1] == 1
    assert closed_form_composita(ClosedFormFamily("geometric"), 5).row(5) == (1, 4, 6, 4, 1)


def test_closed_form_parameters():
    with pytest.raises(InvalidParameter):
        ClosedFormFamily("log1p", a=1)
    with pytest.raises(InvalidParameter):
        ClosedFormFamily("linear_quadratic", a=1)
    with pytest.raises(InvalidParameter):
        ClosedFormFamily("sine")
    assert set(FAMILIES) == {f.tag for f in FAMILY_CASES}


def test_unsigned_log1p_convention_is_wrong():
    # unsigned Stirling numbers only agree with the true composita when n - k is even
    t = composita_by_powers(ser.log1p(8), 8)
    import math

    for n in range(1, 9):
        for k in range(1, n + 1):
            unsigned = Fraction(math.factorial(k) * stirling1_unsigned(n, k), math.factorial(n))
            alt = (-1) ** k * unsigned
            signed = Fraction(math.factorial(k) * stirling1_signed(n, k), math.factorial(n))
            assert t[n, k] == signed
            assert (t[n, k] == unsigned) == ((n - k) % 2 == 0)
            assert (t[n, k] == alt) == (n % 2 == 0)


def test_scale():
    lp = composita_by_powers(ser.log1p(8), 8)
    two = composita_scale(lp, 2)
    fam = closed_form_composita(ClosedFormFamily("log1p"), 8)
    assert all(two[n, k] == 2**k * fam[n, k] for n, k, _ in two)
    assert composita_scale(lp, 1) == lp
    assert all(v == 0 for _, _, v in composita_scale(lp, 0))
    assert two == composita_by_powers(2 * ser.log1p(8), 8)


def test_sum_examples():
    N = 10
    x = identity_composita(N)
    assert composita_sum(x, x) == composita_by_powers(Series([0, 2], N), N)
    f = 2 * ser.log1p(N)
    g = -ser.variable(N)
    got = composita_sum(composita_by_powers(f, N), composita_by_powers(g, N))
    assert got == composita_by_powers(f + g, N)
    lp = composita_by_powers(ser.log1p(N), N)
    assert composita_sum(lp, composita_by_powers(ser.zero(N), N)) == lp
    with pytest.raises(ShapeMismatch):
        composita_sum(lp, x.truncate(5))


@pytest.mark.parametrize("name,f", list(corpus(8).items())[:6])
def test_sum_matches_powers_on_corpus(name, f):
    g = Series([0, -1, 0, 2], 8)
    assert composita_sum(composita_by_powers(f, 8), composita_by_powers(g, 8)) == composita_by_powers(f + g, 8)


def test_product_examples():
    N = 10
    lp = composita_by_powers(ser.log1p(N), N)
    assert composita_product_with_series(lp, ser.constant(1, N)) == lp
    one_minus_x = Series([1, -1], N)
    prod = composita_product_with_series(lp, one_minus_x)
    assert prod == composita_by_powers(ser.log1p(N) * one_minus_x, N)
    x_plus = composita_product_with_series(identity_composita(N), Series([1, 1], N))
    assert x_plus == closed_form_composita(ClosedFormFamily("linear_quadratic", 1, 1), N)


def test_product_double_sum_display():
    # k! sum_{i=k}^{n} s(i,k)/i! C(k, n-i) (-1)^(n-i), signed Stirling numbers
    import math

    N = 10
    prod = composita_product_with_series(composita_by_powers(ser.log1p(N), N), Series([1, -1], N))
    for n in range(1, N + 1):
        for k in range(1, n + 1):
            display = math.factorial(k) * sum(
                Fraction(stirling1_signed(i, k), math.factorial(i)) * binomial(k, n - i) * (-1) ** (n - i)
                for i in range(k, n + 1)
            )
            assert prod[n, k] == display


@pytest.mark.parametrize("name,f", list(corpus(8).items())[:6])
def test_product_matches_powers_on_corpus(name, f):
    b = Series([2, -1, 3], 8)
    assert composita_product_with_series(composita_by_powers(f, 8), b) == composita_by_powers(f * b, 8)


def test_power_and_composition_rules():
    N = 9
    f = Series([0, 1, -2, 1], N)
    tf = composita_by_powers(f, N)
    assert composita_of_power(tf, 3) == composita_by_powers(ser.power(f, 3), N)
    r = ser.expm1(N)
    assert composita_of_composition(composita_by_powers(r, N), tf) == composita_by_powers(ser.compose_series(r, f), N)
