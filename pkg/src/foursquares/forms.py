"""The named q-series and every coefficient-exact identity check.

Constructors for the series in play:

    theta     sum over all integers n of q^(n^2)
    theta4    theta to the fourth power; coefficient n counts the ordered
              four-square representations of n
    series_L  1 - 24 * sum sigma(n) q^n
    series_M  1 + 240 * sum sigma3(n) q^n
    psi       the weight-1 density factor, three independent constructions
    phi       the companion solution's series, by recursion
    partition_series   P(q) = sum p(k) q^k

The verify_* functions re-derive both sides of an identity through
independent routes and compare exactly, reporting the first failing
coefficient index on mismatch.  Verification order defaults to 500.
"""

from __future__ import annotations

from fractions import Fraction

from .numtheory import (
    jacobi_count,
    partitions_table,
    sigma3_table,
    sigma_table,
)
from .qseries import QSeries, exp0, qderiv, substitute_neg
from .report import CheckReport

DEFAULT_ORDER = 500

NAMED_SERIES = ("theta", "theta4", "L", "M", "psi", "phi", "P")

VERIFICATIONS = (
    "jacobi",
    "lagrange",
    "full-jacobi",
    "ode",
    "psi-triple",
    "lambert",
    "proportionality",
)


def theta(order: int) -> QSeries:
    """Coefficient n is 2 if n is a positive perfect square, 1 if n = 0, else 0."""
    if order < 0:
        raise ValueError("order must be >= 0")
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    k = 1
    while k * k <= order:
        coeffs[k * k] = 2
        k += 1
    return QSeries(coeffs)


def theta4(order: int) -> QSeries:
    """Fourth power of theta; coefficient n counts four-square representations."""
    return theta(order) ** 4


def series_L(order: int) -> QSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    if order == 0:
        return QSeries([1])
    sig = sigma_table(order)
    return QSeries([1] + [-24 * sig[n] for n in range(1, order + 1)])


def series_M(order: int) -> QSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    if order == 0:
        return QSeries([1])
    sig3 = sigma3_table(order)
    return QSeries([1] + [240 * sig3[n] for n in range(1, order + 1)])


def partition_series(order: int) -> QSeries:
    """P(q), the generating function of the partition numbers."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return QSeries(partitions_table(order))


def psi_by_recursion(order: int) -> QSeries:
    """psi from b_0 = 1, b_n = (2/n) * sum_{k=1}^{n} sigma(k) b_{n-k}.

    The coefficients are provably integers; a non-integral value would
    falsify that, so it raises rather than warns.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    sig = sigma_table(order) if order >= 1 else [0]
    b = [Fraction(1)]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += sig[k] * b[n - k]
        bn = 2 * acc / n
        if bn.denominator != 1:
            raise ArithmeticError(f"b_{n} = {bn} is not an integer")
        b.append(bn)
    return QSeries(b)


def psi_by_sigma3_recursion(order: int) -> QSeries:
    """psi from the alternate recursion b_n = 10/(n(6n-1)) sum sigma3(k) b_{n-k}.

    Agreement with :func:`psi_by_recursion` is exactly the formal content of
    the Ramanujan differential identity.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    sig3 = sigma3_table(order) if order >= 1 else [0]
    b = [Fraction(1)]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += sig3[k] * b[n - k]
        b.append(10 * acc / (n * (6 * n - 1)))
    return QSeries(b)


def psi_by_exp(order: int) -> QSeries:
    """psi as exp(2 * sum sigma(n)/n q^n)."""
    if order < 0:
        raise ValueError("order must be >= 0")
    sig = sigma_table(order) if order >= 1 else [0]
    arg = QSeries([0] + [Fraction(2 * sig[n], n) for n in range(1, order + 1)])
    return exp0(arg)


def psi_by_partition_square(order: int) -> QSeries:
    """psi as the square of the partition generating function."""
    return partition_series(order) ** 2


def phi_by_recursion(order: int) -> QSeries:
    """phi from a_0 = 1, a_n = 10/(n(6n+1)) sum sigma3(k) a_{n-k}; exact rationals."""
    if order < 0:
        raise ValueError("order must be >= 0")
    sig3 = sigma3_table(order) if order >= 1 else [0]
    a = [Fraction(1)]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            acc += sig3[k] * a[n - k]
        a.append(10 * acc / (n * (6 * n + 1)))
    return QSeries(a)


def named_series(name: str, order: int) -> QSeries:
    """Look up a series constructor by its display name."""
    builders = {
        "theta": theta,
        "theta4": theta4,
        "L": series_L,
        "M": series_M,
        "psi": psi_by_recursion,
        "phi": phi_by_recursion,
        "P": partition_series,
    }
    try:
        return builders[name](order)
    except KeyError:
        raise ValueError(f"unknown series {name!r}; expected one of {NAMED_SERIES}") from None


# ----------------------------------------------------------------- verifiers

def _first_mismatch(got: QSeries, want: QSeries, upto: int):
    """Index and value pair of the first disagreement up to `upto`, or None."""
    for n in range(upto + 1):
        if got[n] != want[n]:
            return n, got[n], want[n]
    return None


def _series_report(identity: str, order: int, got: QSeries, want: QSeries) -> CheckReport:
    bad = _first_mismatch(got, want, order)
    if bad is None:
        return CheckReport(identity=identity, passed=True, order=order)
    n, g, w = bad
    return CheckReport(
        identity=identity,
        passed=False,
        order=order,
        witness=f"coefficient {n}: got {g}, expected {w}",
    )


def _ode_report(L: QSeries, M: QSeries, order: int) -> CheckReport:
    defect = 12 * qderiv(L) - L * L + M
    return _series_report("ramanujan-ode", order, defect, QSeries.zero(order))


def verify_ramanujan_ode(order: int = DEFAULT_ORDER) -> CheckReport:
    """12 q dL/dq - L^2 + M must vanish identically to the given order."""
    if order < 1:
        raise ValueError("order must be >= 1")
    return _ode_report(series_L(order), series_M(order), order)


def verify_jacobi(order: int = DEFAULT_ORDER) -> CheckReport:
    """theta^4(q) - theta^4(-q) has coefficient 16*sigma(n) at odd n, 0 at even n."""
    if order < 1:
        raise ValueError("order must be >= 1")
    t4 = theta4(order)
    diff = t4 - substitute_neg(t4)
    sig = sigma_table(order)
    want = QSeries([0] + [16 * sig[n] if n % 2 else 0 for n in range(1, order + 1)])
    return _series_report("jacobi-odd-part", order, diff, want)


def verify_lagrange(order: int = DEFAULT_ORDER) -> CheckReport:
    """Every theta^4 coefficient for n >= 1 is strictly positive."""
    if order < 1:
        raise ValueError("order must be >= 1")
    t4 = theta4(order)
    for n in range(1, order + 1):
        if t4[n] <= 0:
            return CheckReport(
                identity="lagrange-positivity",
                passed=False,
                order=order,
                witness=f"coefficient {n}: got {t4[n]}, expected > 0",
            )
    return CheckReport(identity="lagrange-positivity", passed=True, order=order)


def verify_full_jacobi(order: int = DEFAULT_ORDER) -> CheckReport:
    """theta^4 coefficient n equals 8 * sum of divisors of n not divisible by 4."""
    if order < 1:
        raise ValueError("order must be >= 1")
    t4 = theta4(order)
    want = QSeries([1] + [jacobi_count(n) for n in range(1, order + 1)])
    return _series_report("full-jacobi-formula", order, t4, want)


def verify_sigma_lambert(order: int = DEFAULT_ORDER) -> CheckReport:
    """sum sigma(n) q^n equals the Lambert sum of n q^n / (1 - q^n).

    The Lambert side is built term by term: n q^n/(1-q^n) expands as the
    geometric series sum_j n q^(nj), truncated at the working order.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    lambert = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1):
        for m in range(n, order + 1, n):
            lambert[m] += n
    sig = sigma_table(order)
    got = QSeries(lambert)
    want = QSeries([0] + [sig[n] for n in range(1, order + 1)])
    return _series_report("sigma-lambert", order, got, want)


def verify_psi_triple(order: int = 300) -> CheckReport:
    """All constructions of psi agree, coefficients are positive integers,
    and the companion coefficients satisfy 0 < a_n <= b_n throughout."""
    if order < 1:
        raise ValueError("order must be >= 1")
    by_rec = psi_by_recursion(order)
    for name, other in (
        ("exp-construction", psi_by_exp(order)),
        ("partition-square", psi_by_partition_square(order)),
        ("sigma3-recursion", psi_by_sigma3_recursion(order)),
    ):
        bad = _first_mismatch(other, by_rec, order)
        if bad is not None:
            n, g, w = bad
            return CheckReport(
                identity="psi-triple",
                passed=False,
                order=order,
                witness=f"{name} coefficient {n}: got {g}, expected {w}",
            )
    a = phi_by_recursion(order)
    for n in range(order + 1):
        if by_rec[n] <= 0:
            return CheckReport(
                identity="psi-triple", passed=False, order=order,
                witness=f"b_{n} = {by_rec[n]} is not positive",
            )
        if not (0 < a[n] <= by_rec[n]):
            return CheckReport(
                identity="psi-triple", passed=False, order=order,
                witness=f"a_{n} = {a[n]} outside (0, b_{n} = {by_rec[n]}]",
            )
    return CheckReport(identity="psi-triple", passed=True, order=order)


def verify_final_proportionality(order: int = DEFAULT_ORDER) -> CheckReport:
    """theta^4(q) - theta^4(-q) is a constant multiple of L(q) - L(-q).

    The constant is computed from the leading nonzero coefficients, never
    hard-coded, then checked across every index.  (It comes out to -1/3.)
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    t4 = theta4(order)
    lhs = t4 - substitute_neg(t4)
    L = series_L(order)
    rhs = L - substitute_neg(L)
    lead = next((n for n in range(order + 1) if rhs[n] != 0), None)
    if lead is None:
        return CheckReport(
            identity="final-proportionality", passed=False, order=order,
            witness="right side vanishes identically; no constant to derive",
        )
    ratio = lhs[lead] / rhs[lead]
    got = lhs
    want = ratio * rhs
    report = _series_report("final-proportionality", order, got, want)
    if report.passed:
        return CheckReport(
            identity="final-proportionality", passed=True, order=order,
            witness=f"constant = {ratio}",
        )
    return report


def run_verification(name: str, order: int) -> CheckReport:
    """Dispatch a named coefficient-exact verification."""
    runners = {
        "jacobi": verify_jacobi,
        "lagrange": verify_lagrange,
        "full-jacobi": verify_full_jacobi,
        "ode": verify_ramanujan_ode,
        "psi-triple": verify_psi_triple,
        "lambert": verify_sigma_lambert,
        "proportionality": verify_final_proportionality,
    }
    try:
        runner = runners[name]
    except KeyError:
        raise ValueError(f"unknown verification {name!r}; expected one of {VERIFICATIONS}") from None
    return runner(order)
