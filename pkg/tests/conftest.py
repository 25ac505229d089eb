import random
from fractions import Fraction
from pathlib import Path

import pytest

from composita import series as ser
from composita.series import Series

FIXTURES = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> list[list[int]]:
    rows = []
    for line in (FIXTURES / name).read_text().splitlines():
        if line.startswith("#") or not line.strip():
            continue
        rows.append([int(v) for v in line.split()])
    return rows


def random_series(seed: int, order: int) -> Series:
    rng = random.Random(seed)
    return Series([0] + [rng.randint(-3, 3) for _ in range(order)], order)


def corpus(order: int) -> dict[str, Series]:
    """Zero-constant-term series used throughout the suite."""
    x = ser.variable(order)
    out = {
        "geometric": Series([0] + [1] * order, order),
        "x+x^2": Series([0, 1, 1], order),
        "x+2x^2+3x^3": Series([0, 1, 2, 3], order),
        "log1p": ser.log1p(order),
        "expm1": ser.expm1(order),
        "x-x^2": Series([0, 1, -1], order),
        "x-x^2-x^3": Series([0, 1, -1, -1], order),
        "2log1p-x": 2 * ser.log1p(order) - x,
    }
    for seed in (1, 2, 3):
        out[f"random{seed}"] = random_series(seed, order)
    return out


@pytest.fixture
def frac():
    return Fraction


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, line = RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {line}")
