"""Series engine: arithmetic examples, ring axioms, text round-trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foursquares.qseries import (
    QSeries,
    add,
    exp0,
    format_golden,
    format_series,
    log1,
    mul,
    parse_golden,
    parse_series,
    qderiv,
    substitute_neg,
)


def series(*coeffs):
    return QSeries([Fraction(c) if "/" not in str(c) else Fraction(str(c)) for c in coeffs])


def theta_like(order):
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    k = 1
    while k * k <= order:
        coeffs[k * k] = 2
        k += 1
    return QSeries(coeffs)


# Small random series for property tests.
rationals = st.fractions(
    min_value=-10, max_value=10, max_denominator=12
)
small_series = st.lists(rationals, min_size=1, max_size=8).map(QSeries)


class TestAdd:
    def test_cancellation(self):
        assert series(1, 1) + series(1, -1) == series(2, 0)

    def test_zero_identity(self):
        t = theta_like(9)
        assert t + QSeries.zero(9) == t

    def test_theta_even_part_against_double_sum(self):
        # independent oracle: coefficient n of theta(q) + theta(-q) is the
        # number of integers m with m^2 = n, doubled when n is even
        t = theta_like(4)
        got = t + substitute_neg(t)
        for n in range(5):
            direct = sum(1 for m in range(-4, 5) if m * m == n)
            expected = 2 * direct if n % 2 == 0 else 0
            assert got[n] == expected
        assert [int(c) for c in got.coeffs] == [2, 0, 0, 0, 4]

    def test_min_order_rule(self):
        a = QSeries([1, 2, 3, 4])
        b = QSeries([1, 1])
        assert (a + b).order == 1


class TestMul:
    def test_difference_of_squares(self):
        got = series(1, 1, 0) * series(1, -1, 0)
        assert got == series(1, 0, -1)

    def test_theta_squared_squared_matches_stated_coefficients(self):
        t2 = theta_like(9) ** 2
        got = t2 * t2
        assert [int(c) for c in got.coeffs] == [1, 8, 24, 32, 24, 48, 96, 64, 24, 104]

    def test_partition_square(self):
        # P(q)^2 through order 6
        p = QSeries([1, 1, 2, 3, 5, 7, 11])
        got = p * p
        assert [int(c) for c in got.coeffs] == [1, 2, 5, 10, 20, 36, 65]

    def test_monomial_shifts_order(self):
        q = QSeries.monomial(1, 1)
        a = QSeries([1, 2, 3])
        got = q * a
        assert got.order == 3
        assert [int(c) for c in got.coeffs] == [0, 1, 2, 3]

    def test_two_monomials(self):
        got = QSeries.monomial(2, 1) * QSeries.monomial(3, 2)
        assert got.order == 3
        assert got[3] == 6


class TestPow:
    def test_theta_fourth_to_order_one(self):
        assert theta_like(1) ** 4 == series(1, 8)

    def test_power_zero(self):
        assert theta_like(5) ** 0 == QSeries.one(5)

    def test_binomial_square(self):
        assert QSeries([1, 1, 0]) ** 2 == series(1, 2, 1)

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            theta_like(3) ** -1


class TestQderiv:
    def test_constant(self):
        assert qderiv(QSeries.one(4)) == QSeries.zero(4)

    def test_geometric(self):
        assert qderiv(series(1, 1, 1, 1)) == series(0, 1, 2, 3)

    def test_twice_matches_cubes(self):
        # applying q d/dq twice to sum m q^m gives sum m^3 q^m
        base = QSeries([0] + [m for m in range(1, 11)])
        got = qderiv(qderiv(base))
        assert got == QSeries([0] + [m**3 for m in range(1, 11)])


class TestExpLog:
    def test_log_of_one(self):
        assert log1(QSeries.one(6)) == QSeries.zero(6)
        assert exp0(QSeries.zero(6)) == QSeries.one(6)

    def test_exp_of_lambert_sum_is_psi(self):
        # exp(2 sum sigma(n)/n q^n) through order 6
        sig = [0, 1, 3, 4, 7, 6, 12]
        arg = QSeries([0] + [Fraction(2 * sig[n], n) for n in range(1, 7)])
        got = exp0(arg)
        assert [int(c) for c in got.coeffs] == [1, 2, 5, 10, 20, 36, 65]

    def test_round_trip(self):
        a = QSeries([0, 1, 1], order=10)
        assert log1(exp0(a)) == a

    def test_preconditions(self):
        with pytest.raises(ValueError):
            log1(series(2, 1))
        with pytest.raises(ValueError):
            exp0(series(1, 1))

    @given(st.lists(rationals, min_size=1, max_size=7))
    def test_exp_log_inverse_property(self, tail):
        a = QSeries([0] + tail)
        assert log1(exp0(a)) == a


class TestSubstituteNeg:
    def test_parity_rule(self):
        t = theta_like(9)
        got = substitute_neg(t)
        for n in range(10):
            assert got[n] == (-t[n] if n % 2 else t[n])

    @given(small_series)
    def test_involution(self, a):
        assert substitute_neg(substitute_neg(a)) == a

    @given(small_series, small_series)
    def test_ring_homomorphism(self, a, b):
        n = min(a.order, b.order)
        assert substitute_neg(a + b) == substitute_neg(a) + substitute_neg(b)
        assert substitute_neg(a * b) == substitute_neg(a) * substitute_neg(b)

    def test_jacobi_difference_coefficients(self):
        t4 = theta_like(9) ** 4
        got = t4 - substitute_neg(t4)
        odd = [int(got[n]) for n in (1, 3, 5, 7, 9)]
        assert odd == [16, 64, 96, 128, 208]
        assert all(got[n] == 0 for n in (0, 2, 4, 6, 8))


@st.composite
def same_order_series(draw, count):
    """Tuples of series sharing one truncation order (the ring is per-order)."""
    n = draw(st.integers(min_value=0, max_value=7))
    return tuple(
        QSeries(draw(st.lists(rationals, min_size=n + 1, max_size=n + 1)))
        for _ in range(count)
    )


def _tr(s, order):
    return QSeries(s.coeffs, order=order)


class TestRingAxioms:
    # the laws hold in the ring of series truncated at a fixed order; pure
    # monomial factors may carry extra known coefficients, which truncation
    # discards before comparing.  At least 1000 random cases in total.
    @settings(max_examples=400, deadline=None)
    @given(same_order_series(count=3))
    def test_mul_axioms(self, abc):
        a, b, c = abc
        n = a.order
        assert _tr(a * b, n) == _tr(b * a, n)
        assert _tr((a * b) * c, n) == _tr(a * (b * c), n)
        assert _tr(a * (b + c), n) == _tr(a * b + a * c, n)

    @settings(max_examples=400, deadline=None)
    @given(same_order_series(count=3))
    def test_add_axioms(self, abc):
        a, b, c = abc
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)

    @settings(max_examples=300, deadline=None)
    @given(same_order_series(count=2))
    def test_qderiv_is_a_derivation(self, ab):
        a, b = ab
        n = a.order
        assert _tr(qderiv(a * b), n) == _tr(qderiv(a) * b + a * qderiv(b), n)


class TestText:
    def test_display_format(self):
        s = QSeries([1, Fraction(-24), Fraction(10, 7)])
        assert format_series(s) == "1 - 24*q + 10/7*q^2"

    def test_parse_examples(self):
        assert parse_series("1 - 24*q + 10/7*q^2") == QSeries(
            [1, -24, Fraction(10, 7)]
        )
        assert parse_series("-3/2") == QSeries([Fraction(-3, 2)])

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            parse_series("1 + fish*q")
        with pytest.raises(ValueError):
            parse_series("")

    @settings(max_examples=300, deadline=None)
    @given(small_series)
    def test_print_parse_round_trip(self, a):
        assert parse_series(format_series(a)) == a

    @settings(max_examples=200, deadline=None)
    @given(small_series)
    def test_golden_round_trip(self, a):
        assert parse_golden(format_golden(a)) == a

    def test_golden_format(self):
        s = QSeries([1, Fraction(10, 7)])
        assert format_golden(s) == "0: 1\n1: 10/7\n"

    def test_golden_sequence_enforced(self):
        with pytest.raises(ValueError):
            parse_golden("0: 1\n2: 3\n")


class TestFunctionAliases:
    def test_module_level_ops(self):
        a, b = series(1, 2), series(3, 4)
        assert add(a, b) == a + b
        assert mul(a, b) == a * b


class TestExactness:
    def test_no_floats_accepted(self):
        with pytest.raises((TypeError, ValueError)):
            QSeries([0.5])

    def test_rational_arithmetic_stays_exact(self):
        a = QSeries([Fraction(1, 3)] * 5)
        b = a * a
        assert b[0] == Fraction(1, 9)
        assert b[4] == Fraction(5, 9)
