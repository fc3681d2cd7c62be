"""Exact integer arithmetic oracles: divisor sums, partition numbers, and
brute-force four-square representation counts.

Everything here is ground truth for the series modules: plain enumeration
and trial division over arbitrary-precision integers, no clever counting.
All functions are pure; callers may fan out over n with no coordination.
"""

from __future__ import annotations

from math import gcd, isqrt

import numpy as np

# r4_bruteforce allocates O(n) lookup tables; cap the argument so a typo
# cannot ask for gigabytes.
R4_MAX_N = 10**6


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending, by trial division."""
    if n <= 0:
        raise ValueError("n must be >= 1")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def sigma(n: int) -> int:
    """Sum of the positive divisors of n."""
    return sum(divisors(n))


def sigma3(n: int) -> int:
    """Sum of the cubes of the positive divisors of n."""
    return sum(d**3 for d in divisors(n))


def sigma_table(limit: int) -> list[int]:
    """[sigma(1..limit)] as a table with sigma_table(N)[n] = sigma(n); index 0 is 0."""
    return _divisor_power_table(limit, 1)


def sigma3_table(limit: int) -> list[int]:
    """Like :func:`sigma_table` for the cubes of divisors."""
    return _divisor_power_table(limit, 3)


def _divisor_power_table(limit: int, power: int) -> list[int]:
    if limit < 1:
        raise ValueError("limit must be >= 1")
    table = [0] * (limit + 1)
    for d in range(1, limit + 1):
        dp = d**power
        for m in range(d, limit + 1, d):
            table[m] += dp
    return table


def partitions_table(limit: int) -> list[int]:
    """[p(0), p(1), ..., p(limit)] by Euler's pentagonal-number recurrence."""
    if limit < 0:
        raise ValueError("limit must be >= 0")
    p = [0] * (limit + 1)
    p[0] = 1
    for n in range(1, limit + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def partitions(n: int) -> int:
    """Number of integer partitions of n."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return partitions_table(n)[n]


def r4_bruteforce(n: int) -> int:
    """Number of ordered quadruples (a,b,c,d) in Z^4 with a^2+b^2+c^2+d^2 = n.

    Direct enumeration: a, b, c run over the full signed ranges |a|,|b|,|c|
    <= sqrt(n) and the residual n - a^2 - b^2 - c^2 is tested for being a
    perfect square d^2 (counting d and -d).  The loops are batched through
    numpy for speed but the enumeration is exactly that triple loop.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > R4_MAX_N:
        raise ValueError(f"n must be <= {R4_MAX_N}")
    if n == 0:
        return 1
    root = isqrt(n)
    signed_sq = np.arange(-root, root + 1, dtype=np.int64) ** 2
    # residual lookup: number of d with d*d == m (index -1 is the m < 0 sink)
    dcount = np.zeros(n + 2, dtype=np.int64)
    dcount[0] = 1
    roots = np.arange(1, root + 1, dtype=np.int64)
    dcount[roots * roots] = 2
    ab = (signed_sq[:, None] + signed_sq[None, :]).ravel()
    ab = ab[ab <= n]
    rem = n - ab[:, None] - signed_sq[None, :]
    np.maximum(rem, -1, out=rem)
    return int(dcount[rem.ravel()].sum())


def jacobi_count(n: int) -> int:
    """8 times the sum of the divisors of n not divisible by 4."""
    if n <= 0:
        raise ValueError("n must be >= 1")
    return 8 * sum(d for d in divisors(n) if d % 4 != 0)


def coprime(m: int, n: int) -> bool:
    return gcd(m, n) == 1
