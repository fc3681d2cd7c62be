"""Number-theory oracles, checked against even dumber enumerations."""

from math import gcd, isqrt

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foursquares.numtheory import (
    divisors,
    jacobi_count,
    partitions,
    partitions_table,
    r4_bruteforce,
    sigma,
    sigma3,
    sigma3_table,
    sigma_table,
)
from foursquares.qseries import QSeries


def partitions_by_enumeration(n, max_part=None):
    """Count partitions by explicit recursion over the largest part."""
    if n == 0:
        return 1
    if max_part is None:
        max_part = n
    return sum(
        partitions_by_enumeration(n - k, min(k, n - k)) for k in range(1, min(max_part, n) + 1)
    )


def r4_by_quadruple_scan(n):
    """Count quadruples by scanning all four coordinates, no shortcuts."""
    r = isqrt(n)
    return sum(
        1
        for a in range(-r, r + 1)
        for b in range(-r, r + 1)
        for c in range(-r, r + 1)
        for d in range(-r, r + 1)
        if a * a + b * b + c * c + d * d == n
    )


class TestDivisorSums:
    def test_sigma_examples(self):
        assert sigma(1) == 1
        assert sigma(9) == 13
        assert sigma(7) == 8

    def test_sigma3_examples(self):
        assert sigma3(1) == 1
        assert sigma3(2) == 9  # 1 + 8
        assert sigma3(6) == 252  # 1 + 8 + 27 + 216

    def test_rejects_nonpositive(self):
        for bad in (0, -1, -100):
            with pytest.raises(ValueError):
                sigma(bad)
            with pytest.raises(ValueError):
                sigma3(bad)
            with pytest.raises(ValueError):
                jacobi_count(bad)

    def test_tables_match_pointwise(self):
        st1, st3 = sigma_table(200), sigma3_table(200)
        for n in range(1, 201):
            assert st1[n] == sigma(n)
            assert st3[n] == sigma3(n)

    @settings(max_examples=200, deadline=None)
    @given(st.integers(1, 300), st.integers(1, 300))
    def test_multiplicative_on_coprime_arguments(self, m, n):
        if gcd(m, n) == 1:
            assert sigma(m * n) == sigma(m) * sigma(n)
            assert sigma3(m * n) == sigma3(m) * sigma3(n)

    def test_divisors_sorted_and_complete(self):
        assert divisors(12) == [1, 2, 3, 4, 6, 12]
        assert divisors(1) == [1]


class TestPartitions:
    def test_small_values(self):
        assert partitions(0) == 1
        assert partitions(5) == 7
        assert partitions(6) == 11

    def test_against_enumeration(self):
        for n in range(25):
            assert partitions(n) == partitions_by_enumeration(n)

    def test_matches_product_expansion(self):
        # coefficient of q^n in prod 1/(1 - q^k), each factor expanded as a
        # geometric series and multiplied through the series engine
        order = 40
        prod = QSeries.one(order)
        for k in range(1, order + 1):
            factor = QSeries([1 if m % k == 0 else 0 for m in range(order + 1)])
            prod = prod * factor
        table = partitions_table(order)
        assert [int(c) for c in prod.coeffs] == table

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            partitions(-1)


class TestR4:
    def test_base_cases(self):
        assert r4_bruteforce(0) == 1
        assert r4_bruteforce(1) == 8
        assert r4_bruteforce(2) == 24

    def test_against_full_quadruple_scan(self):
        for n in range(40):
            assert r4_bruteforce(n) == r4_by_quadruple_scan(n)

    def test_matches_jacobi_formula_at_desk_scale(self):
        for n in range(1, 500):
            assert r4_bruteforce(n) == jacobi_count(n)

    def test_lagrange_at_desk_scale(self):
        assert all(r4_bruteforce(n) >= 1 for n in range(1, 300))

    def test_bounds(self):
        with pytest.raises(ValueError):
            r4_bruteforce(-1)
        with pytest.raises(ValueError):
            r4_bruteforce(10**6 + 1)

    @settings(max_examples=300, deadline=None)
    @given(st.tuples(*(st.integers(-50, 50),) * 4))
    def test_doubling_identity(self, quad):
        a, b, c, d = quad
        lhs = 2 * (a * a + b * b + c * c + d * d)
        rhs = (a + b) ** 2 + (a - b) ** 2 + (c + d) ** 2 + (c - d) ** 2
        assert lhs == rhs


class TestJacobiCount:
    def test_examples(self):
        assert jacobi_count(1) == 8
        assert jacobi_count(2) == 24  # 8 * (1 + 2)
        assert jacobi_count(10) == 144  # 8 * (1 + 2 + 5 + 10)

    def test_multiples_of_four_excluded(self):
        assert jacobi_count(4) == 24  # divisors 1, 2 only
        assert jacobi_count(8) == 24  # divisors 1, 2 only
