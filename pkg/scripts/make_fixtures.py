#!/usr/bin/env python3
"""Regenerate the known-sequence fixtures in tests/fixtures/.

Every file is produced by a naive oracle (enumeration, recurrence or
fixed-point iteration), never by the composita formulas under test. The
oracle used is recorded in each file's header.

    python scripts/make_fixtures.py
"""

from __future__ import annotations

import itertools
import math
from pathlib import Path

from composita import series as ser
from composita.triangle import composita_by_compositions

OUT = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def as_int(v) -> int:
    if getattr(v, "denominator", 1) != 1:
        raise ValueError(f"oracle produced non-integer {v}")
    return int(v)


def write(name: str, oracle: str, rows) -> None:
    lines = ["# generated by scripts/make_fixtures.py", f"# oracle: {oracle}"]
    lines += [" ".join(str(v) for v in row) for row in rows]
    (OUT / name).write_text("\n".join(lines) + "\n")


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for start in range(len(perm)):
        if not seen[start]:
            cycles += 1
            i = start
            while not seen[i]:
                seen[i] = True
                i = perm[i]
    return cycles


def set_partitions(n: int):
    """Restricted growth strings: block label per element."""
    def grow(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))
    if n == 0:
        yield []
        return
    yield from grow([0], 0)


def fixed_point(rhs: ser.Series, N: int) -> ser.Series:
    """Solve 2A - expm1(A) = rhs, i.e. A = rhs + (expm1(A) - A), by iteration."""
    e = ser.expm1(N)
    a = ser.zero(N)
    for _ in range(N + 1):
        a = rhs + (ser.compose_series(e, a) - a)
    return a


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)

    ones = ser.Series([0] + [1] * 10)
    t = composita_by_compositions(ones, 10)
    write("pascal.txt", "composition enumeration of x/(1-x), rows 1..10",
          [[as_int(v) for v in t.row(n)] for n in range(1, 11)])

    cat = ser.reversion_series_newton(ser.Series([0, 1, -1], 12))
    write("catalan.txt", "Newton reversion of x - x^2, a(0..12)", [[as_int(c) for c in cat]])

    fib = ser.reciprocal_series(ser.Series([1, -1, -1], 15))
    write("fibonacci.txt", "reciprocal recurrence of 1 - x - x^2, a(0..15)", [[as_int(c) for c in fib]])

    rows = []
    for n in range(0, 8):
        counts = [0] * (n + 1)
        for perm in itertools.permutations(range(n)):
            counts[cycle_count(perm)] += 1
        rows.append(counts)
    write("stirling1_unsigned.txt", "cycle counts over all permutations, n = 0..7, k = 0..n", rows)

    rows = []
    for n in range(0, 9):
        counts = [0] * (n + 1)
        for labels in set_partitions(n):
            counts[len(set(labels))] += 1
        rows.append(counts)
    write("stirling2.txt", "enumeration of set partitions, n = 0..8, k = 0..n", rows)

    N = 8
    sol = fixed_point(ser.log1p(N), N)
    write("functional_log1p.txt",
          "fixed-point iteration of 2A - expm1(A) = log1p(x); n! a(n), n = 1..8",
          [[as_int(math.factorial(n) * sol[n]) for n in range(1, N + 1)]])

    rev = fixed_point(ser.variable(N), N)
    write("total_partitions.txt",
          "fixed-point iteration of 2A - expm1(A) = x; n! a(n), n = 1..8",
          [[as_int(math.factorial(n) * rev[n]) for n in range(1, N + 1)]])


if __name__ == "__main__":
    main()
