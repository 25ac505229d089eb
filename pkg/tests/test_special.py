import math

import pytest

from composita import series as ser
from composita.special import (
    CombinatoricsCache,
    binomial,
    kronecker_delta,
    stirling1_signed,
    stirling1_unsigned,
    stirling2,
    stirling2_explicit,
)

from conftest import load_fixture


@pytest.mark.parametrize("n,k,expected", [(3, 1, 3), (2, -1, 0), (4, 2, 6), (2, 3, 0), (-1, 0, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal_rule():
    for n in range(1, 30):
        for k in range(-1, n + 2):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_stirling_examples():
    assert stirling2(4, 2) == 7
    assert stirling2_explicit(4, 2) == 7
    assert all(stirling2(n, 1) == 1 for n in range(1, 15))
    assert stirling2(0, 0) == 1
    assert stirling1_unsigned(3, 2) == 3
    assert stirling1_signed(3, 2) == -3
    assert all(stirling1_unsigned(n, n) == 1 for n in range(12))


def test_stirling2_recurrence_matches_explicit_sum():
    for n in range(0, 25):
        for k in range(0, n + 1):
            assert stirling2(n, k) == stirling2_explicit(n, k)


def test_tables_match_enumeration_fixtures():
    for n, row in enumerate(load_fixture("stirling1_unsigned.txt")):
        assert [stirling1_unsigned(n, k) for k in range(n + 1)] == row
    for n, row in enumerate(load_fixture("stirling2.txt")):
        assert [stirling2(n, k) for k in range(n + 1)] == row


def test_bell_numbers_from_enumeration():
    rows = load_fixture("stirling2.txt")
    for n, row in enumerate(rows):
        assert sum(stirling2(n, k) for k in range(n + 1)) == sum(row)


def test_kronecker_delta():
    assert kronecker_delta(3, 3) == 1
    assert kronecker_delta(3, 2) == 0
    assert kronecker_delta(0, 0) == 1


@pytest.mark.parametrize("n", range(1, 13))
def test_log1p_powers_give_signed_stirling(n):
    lp = ser.log1p(12)
    for k in range(1, n + 1):
        c = ser.power(lp, k)[n] * math.factorial(n) / math.factorial(k)
        assert c == stirling1_signed(n, k)


@pytest.mark.parametrize("n", range(1, 13))
def test_expm1_powers_give_stirling2(n):
    em = ser.expm1(12)
    for k in range(1, n + 1):
        c = ser.power(em, k)[n] * math.factorial(n) / math.factorial(k)
        assert c == stirling2(n, k)


def test_cache_grows_on_demand():
    cache = CombinatoricsCache()
    assert cache.rows == 0
    assert cache.stirling2(6, 3) == 90
    assert cache.rows == 6
    assert cache.stirling1_unsigned(7, 0) == 0
    assert cache.stirling2(3, 5) == 0


def test_cache_concurrent_growth():
    from concurrent.futures import ThreadPoolExecutor

    cache = CombinatoricsCache()
    cells = [(n, k) for n in range(40, 0, -1) for k in range(n + 1)]
    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(lambda nk: cache.stirling2(*nk), cells))
    assert got == [stirling2_explicit(n, k) for n, k in cells]
