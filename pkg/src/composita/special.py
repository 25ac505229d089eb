"""Binomial coefficients, Stirling numbers and the Kronecker delta.

Stirling tables are grown row by row from their recurrences and cached;
the alternating-sum formula for the second kind is kept separately as a
cross-check.
"""

from __future__ import annotations

import math
from threading import Lock


class CombinatoricsCache:
    """Row-extensible tables of Stirling numbers.

    ``s1[n][k]`` holds the unsigned numbers of the first kind,
    ``s2[n][k]`` those of the second kind. Rows are appended on demand
    under a lock; existing rows are never modified.
    """

    def __init__(self, rows: int = 0):
        self._s1: list[list[int]] = [[1]]
        self._s2: list[list[int]] = [[1]]
        self._lock = Lock()
        self.ensure(rows)

    @property
    def rows(self) -> int:
        return len(self._s1) - 1

    def ensure(self, n: int) -> None:
        if n <= self.rows:
            return
        with self._lock:
            while len(self._s1) <= n:
                m = len(self._s1)
                prev1, prev2 = self._s1[-1], self._s2[-1]
                row1 = [0] * (m + 1)
                row2 = [0] * (m + 1)
                for k in range(1, m + 1):
                    left1 = prev1[k - 1]
                    left2 = prev2[k - 1]
                    up1 = prev1[k] if k < m else 0
                    up2 = prev2[k] if k < m else 0
                    # c(m,k) = c(m-1,k-1) + (m-1) c(m-1,k)
                    row1[k] = left1 + (m - 1) * up1
                    # S(m,k) = S(m-1,k-1) + k S(m-1,k)
                    row2[k] = left2 + k * up2
                self._s1.append(row1)
                self._s2.append(row2)

    def stirling1_unsigned(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.ensure(n)
        return self._s1[n][k]

    def stirling2(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or k > n:
            return 0
        self.ensure(n)
        return self._s2[n][k]


_cache = CombinatoricsCache()


def binomial(n: int, k: int) -> int:
    """C(n, k), zero whenever k < 0 or k > n (including negative n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """Number of permutations of n elements with exactly k cycles."""
    return _cache.stirling1_unsigned(n, k)


def stirling1_signed(n: int, k: int) -> int:
    """s(n, k) = (-1)^(n-k) c(n, k); these appear in powers of ln(1+x)."""
    c = _cache.stirling1_unsigned(n, k)
    return -c if (n - k) % 2 else c


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks; S(0,0) = 1."""
    return _cache.stirling2(n, k)


def stirling2_explicit(n: int, k: int) -> int:
    """S(n, k) from the alternating sum (1/k!) sum_j (-1)^(k-j) C(k,j) j^n."""
    if n < 0 or k < 0:
        return 0
    total = sum((-1) ** (k - j) * math.comb(k, j) * j**n for j in range(k + 1))
    q, r = divmod(total, math.factorial(k))
    assert r == 0
    return q


def kronecker_delta(n: int, k: int) -> int:
    return 1 if n == k else 0
