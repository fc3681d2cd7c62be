"""Named series construction and the coefficient-exact verifications."""

from fractions import Fraction
from pathlib import Path

import pytest

from foursquares.forms import (
    named_series,
    partition_series,
    phi_by_recursion,
    psi_by_exp,
    psi_by_partition_square,
    psi_by_recursion,
    psi_by_sigma3_recursion,
    run_verification,
    series_L,
    series_M,
    theta,
    theta4,
    verify_final_proportionality,
    verify_full_jacobi,
    verify_jacobi,
    verify_lagrange,
    verify_psi_triple,
    verify_ramanujan_ode,
    verify_sigma_lambert,
    _ode_report,
)
from foursquares.numtheory import r4_bruteforce, sigma, sigma3
from foursquares.qseries import QSeries, parse_golden

GOLDEN_DIR = Path(__file__).resolve().parent.parent / "golden"


class TestTheta:
    def test_order_zero(self):
        assert theta(0) == QSeries([1])

    def test_first_squares(self):
        t = theta(10)
        assert [int(c) for c in t.coeffs] == [1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0]

    def test_coefficient_sixteen(self):
        assert theta(16)[16] == 2

    def test_theta4_display_coefficients(self):
        t4 = theta4(9)
        assert [int(c) for c in t4.coeffs] == [1, 8, 24, 32, 24, 48, 96, 64, 24, 104]

    def test_theta4_examples(self):
        t4 = theta4(10)
        assert t4[0] == 1
        assert t4[5] == 48
        assert t4[10] == r4_bruteforce(10) == 144

    def test_theta4_matches_bruteforce(self):
        t4 = theta4(120)
        for n in range(121):
            assert t4[n] == r4_bruteforce(n)


class TestEisensteinLikeSeries:
    def test_L_coefficients(self):
        L = series_L(5)
        assert L[0] == 1
        assert L[1] == -24
        assert L[2] == -72  # sigma(2) = 3
        assert all(L[n] == -24 * sigma(n) for n in range(1, 6))

    def test_M_coefficients(self):
        M = series_M(5)
        assert M[0] == 1
        assert M[1] == 240
        assert M[2] == 2160  # sigma3(2) = 9
        assert all(M[n] == 240 * sigma3(n) for n in range(1, 6))


class TestPsiPhi:
    def test_b_values(self):
        psi = psi_by_recursion(6)
        assert [int(c) for c in psi.coeffs] == [1, 2, 5, 10, 20, 36, 65]

    def test_b1_directly(self):
        assert psi_by_recursion(1)[1] == 2  # (2/1) sigma(1) b_0

    def test_alternate_recursion_agrees(self):
        assert psi_by_sigma3_recursion(2)[2] == 5
        assert psi_by_sigma3_recursion(60) == psi_by_recursion(60)

    def test_three_constructions_agree(self):
        order = 120
        ref = psi_by_recursion(order)
        assert psi_by_exp(order) == ref
        assert psi_by_partition_square(order) == ref

    def test_constant_terms(self):
        for builder in (psi_by_recursion, psi_by_exp, psi_by_partition_square):
            assert builder(3)[0] == 1

    def test_partition_square_coefficient_two(self):
        assert psi_by_partition_square(2)[2] == 5  # 2*p(0)p(2) + p(1)^2

    def test_a_values(self):
        phi = phi_by_recursion(5)
        want = [
            Fraction(1),
            Fraction(10, 7),
            Fraction(365, 91),
            Fraction(13610, 1729),
            Fraction(135701, 8645),
            Fraction(7419742, 267995),
        ]
        assert list(phi.coeffs) == want

    def test_a_bounded_by_b(self):
        order = 150
        a = phi_by_recursion(order)
        b = psi_by_recursion(order)
        for n in range(order + 1):
            assert 0 < a[n] <= b[n]

    def test_psi_coefficients_are_integers(self):
        # integrality is asserted inside the constructor; reaching here
        # without ArithmeticError is the point
        psi = psi_by_recursion(200)
        assert all(c.denominator == 1 for c in psi.coeffs)


class TestVerifiers:
    def test_ode_small_order(self):
        report = verify_ramanujan_ode(1)
        assert report.passed

    def test_ode_default_scale(self):
        assert verify_ramanujan_ode(120).passed

    def test_ode_negative_control(self):
        # nudging the q-coefficient of L must be caught at index 1
        L = series_L(40)
        bad = QSeries([L[0], L[1] + 1] + [L[n] for n in range(2, 41)])
        report = _ode_report(bad, series_M(40), 40)
        assert not report.passed
        assert report.witness.startswith("coefficient 1:")

    def test_jacobi_values_and_parity(self):
        report = verify_jacobi(99)
        assert report.passed
        t4 = theta4(9)
        diff = [int(c) for c in (t4 - _neg(t4)).coeffs]
        assert [diff[n] for n in (1, 3, 5, 7, 9)] == [16, 64, 96, 128, 208]

    def test_lagrange(self):
        assert verify_lagrange(2000).passed

    def test_full_jacobi(self):
        report = verify_full_jacobi(200)
        assert report.passed
        t4 = theta4(8)
        assert t4[8] == 24
        assert t4[4] == 24

    def test_sigma_lambert(self):
        report = verify_sigma_lambert(100)
        assert report.passed

    def test_lambert_coefficients(self):
        # spot values through the sigma table route
        assert sigma(6) == 12
        assert sigma(1) == 1

    def test_proportionality(self):
        report = verify_final_proportionality(999)
        assert report.passed
        assert "constant = -1/3" in report.witness

    def test_proportionality_leading_coefficients(self):
        assert Fraction(16) == Fraction(-1, 3) * -48
        assert Fraction(64) == Fraction(-1, 3) * (-48 * sigma(3))

    def test_psi_triple(self):
        assert verify_psi_triple(120).passed

    def test_verify_rejects_bad_order(self):
        for name in ("jacobi", "ode", "psi-triple"):
            with pytest.raises(ValueError):
                run_verification(name, 0)

    def test_unknown_verification(self):
        with pytest.raises(ValueError):
            run_verification("nonsense", 10)

    def test_reports_are_deterministic(self):
        first = verify_jacobi(60)
        second = verify_jacobi(60)
        assert first == second


class TestNamedLookup:
    def test_all_names_build(self):
        for name in ("theta", "theta4", "L", "M", "psi", "phi", "P"):
            s = named_series(name, 8)
            assert s.order == 8

    def test_partition_series(self):
        assert [int(c) for c in partition_series(6).coeffs] == [1, 1, 2, 3, 5, 7, 11]

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            named_series("eta", 5)


class TestGoldenFiles:
    @pytest.mark.parametrize("name", ["theta4", "L", "M", "psi", "phi"])
    def test_expansion_matches_golden(self, name):
        golden = parse_golden((GOLDEN_DIR / f"{name}.txt").read_text())
        assert golden.order == 100
        assert named_series(name, 100) == golden


def _neg(series):
    from foursquares.qseries import substitute_neg

    return substitute_neg(series)
