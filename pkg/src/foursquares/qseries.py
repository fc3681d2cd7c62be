"""Truncated formal power series in q with exact rational coefficients.

A :class:`QSeries` of order N stores the coefficients of q^0 .. q^N and
represents a series known modulo q^(N+1).  Coefficients are
:class:`fractions.Fraction` values, so every operation here is exact; no
coefficient is ever stored approximately.  Values are immutable and all
operations are pure functions, safe to share across threads.

Arithmetic on two series of orders N1, N2 truncates to min(N1, N2).  The
one refinement: multiplying by a pure power c*q^k (a series with a single
nonzero coefficient) treats that factor as exact and shifts the other
factor's order up by k, so q * (series of order N) is known through q^(N+1).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable

# Exact rational coefficient type: arbitrary precision, always in lowest
# terms with positive denominator (guaranteed by the Fraction class).
Rational = Fraction

Scalar = int | Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _exact(value) -> Fraction:
    # floats are refused: every stored coefficient must be exact by intent,
    # not by accident of binary representation
    if isinstance(value, float):
        raise TypeError("QSeries coefficients must be exact (int, Fraction, or str)")
    return Fraction(value)


class QSeries:
    """A dense truncated power series sum_{n=0}^{order} c_n q^n."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [_exact(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs.extend([_ZERO] * (order + 1 - len(cs)))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls([1], order=order)

    @classmethod
    def monomial(cls, coeff: Scalar, degree: int, order: int | None = None) -> "QSeries":
        """The series coeff*q^degree, by default of order exactly `degree`."""
        if degree < 0:
            raise ValueError("degree must be >= 0")
        cs = [_ZERO] * degree + [_exact(coeff)]
        return cls(cs, order=order)

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def truncated(self, order: int) -> "QSeries":
        """This series rewritten to the given (possibly larger) order."""
        return QSeries(self._coeffs, order=order)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._coeffs)

    def _monomial_degree(self) -> int | None:
        """Degree k if the series is exactly c*q^k with c != 0, else None."""
        deg = None
        for n, c in enumerate(self._coeffs):
            if c != 0:
                if deg is not None:
                    return None
                deg = n
        return deg

    # ---------------------------------------------------------------- ring ops

    def __add__(self, other: "QSeries | Scalar") -> "QSeries":
        other = _coerce(other, self.order)
        n = min(self.order, other.order)
        return QSeries([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)])

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries([-c for c in self._coeffs])

    def __sub__(self, other: "QSeries | Scalar") -> "QSeries":
        return self + (-_coerce(other, self.order))

    def __rsub__(self, other: Scalar) -> "QSeries":
        return _coerce(other, self.order) - self

    def __mul__(self, other: "QSeries | Scalar") -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return QSeries([c * other for c in self._coeffs])
        if not isinstance(other, QSeries):
            return NotImplemented
        ka = self._monomial_degree()
        kb = other._monomial_degree()
        if ka is not None and kb is not None:
            out_order = min(self.order + kb, other.order + ka)
        elif ka is not None:
            out_order = other.order + ka
        elif kb is not None:
            out_order = self.order + kb
        else:
            out_order = min(self.order, other.order)
        out = [_ZERO] * (out_order + 1)
        for i, ai in enumerate(self._coeffs):
            if not ai or i > out_order:
                continue
            jmax = min(other.order, out_order - i)
            for j in range(jmax + 1):
                bj = other._coeffs[j]
                if bj:
                    out[i + j] += ai * bj
        return QSeries(out)

    def __rmul__(self, other: Scalar) -> "QSeries":
        return self.__mul__(other)

    def __pow__(self, k: int) -> "QSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = QSeries.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # ------------------------------------------------------------- formatting

    def __str__(self) -> str:
        return format_series(self)

    def __repr__(self) -> str:
        return f"QSeries({format_series(self)!r})"


def _coerce(x: "QSeries | Scalar", order: int) -> QSeries:
    if isinstance(x, QSeries):
        return x
    if isinstance(x, (int, Fraction)):
        return QSeries([x], order=order)
    raise TypeError(f"cannot combine QSeries with {type(x).__name__}")


def add(a: QSeries, b: QSeries) -> QSeries:
    """Coefficientwise sum, truncated to the smaller order."""
    return a + b


def mul(a: QSeries, b: QSeries) -> QSeries:
    """Cauchy product, truncated to the smaller order."""
    return a * b


def pow(a: QSeries, k: int) -> QSeries:  # noqa: A001 - mirrors the operation name
    """k-th power by binary exponentiation; pow(a, 0) = 1."""
    return a ** k


def qderiv(a: QSeries) -> QSeries:
    """The operator q*d/dq: coefficient n is mapped to n*c_n.  Order preserved."""
    return QSeries([n * c for n, c in enumerate(a.coeffs)])


def log1(a: QSeries) -> QSeries:
    """Formal logarithm of a series with constant term exactly 1.

    Uses qderiv(log a) = qderiv(a)/a: the quotient v solves v*a = qderiv(a)
    coefficient by coefficient, and log(a) integrates v.
    """
    if a[0] != 1:
        raise ValueError("log1 requires constant term exactly 1")
    n = a.order
    u = qderiv(a)
    v = [_ZERO] * (n + 1)
    for m in range(1, n + 1):
        acc = u[m]
        for k in range(1, m + 1):
            if a[k]:
                acc -= a[k] * v[m - k]
        v[m] = acc
    out = [_ZERO] * (n + 1)
    for m in range(1, n + 1):
        out[m] = v[m] / m
    return QSeries(out)


def exp0(a: QSeries) -> QSeries:
    """Formal exponential of a series with constant term exactly 0.

    Solves qderiv(e) = e*qderiv(a): n*e_n = sum_{k=1}^{n} k*a_k*e_{n-k}.
    """
    if a[0] != 0:
        raise ValueError("exp0 requires constant term exactly 0")
    n = a.order
    e = [_ZERO] * (n + 1)
    e[0] = _ONE
    for m in range(1, n + 1):
        acc = _ZERO
        for k in range(1, m + 1):
            if a[k]:
                acc += k * a[k] * e[m - k]
        e[m] = acc / m
    return QSeries(e)


def substitute_neg(a: QSeries) -> QSeries:
    """The substitution q -> -q: coefficient n negated when n is odd."""
    return QSeries([-c if n & 1 else c for n, c in enumerate(a.coeffs)])


# ------------------------------------------------------------------ text forms
#
# Display format: "c0 + c1*q + c2*q^2 + ..." with every coefficient printed
# (zeros included, so the truncation order round-trips) and rationals as
# "p/q".  Negative coefficients render with a " - " separator.

def format_series(a: QSeries) -> str:
    parts: list[str] = []
    for n, c in enumerate(a.coeffs):
        if n == 0:
            parts.append(str(c))
            continue
        sep = " - " if c < 0 else " + "
        mag = -c if c < 0 else c
        term = f"{mag}*q" if n == 1 else f"{mag}*q^{n}"
        parts.append(sep + term)
    return "".join(parts)


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?P<coeff>\d+(?:/\d+)?)
        (?:\*q(?:\^(?P<exp>\d+))?)?\s*""",
    re.VERBOSE,
)


def parse_series(text: str) -> QSeries:
    """Parse the format produced by :func:`format_series`."""
    text = text.strip()
    if not text:
        raise ValueError("empty series text")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    top = -1
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"malformed series at: {text[pos:pos + 20]!r}")
        value = Fraction(m.group("coeff"))
        if m.group("sign") == "-":
            value = -value
        if "*q" in m.group(0):
            n = int(m.group("exp") or 1)
        else:
            n = 0
        if n in coeffs:
            raise ValueError(f"duplicate coefficient for q^{n}")
        coeffs[n] = value
        top = max(top, n)
        pos = m.end()
    return QSeries([coeffs.get(n, _ZERO) for n in range(top + 1)])


def format_golden(a: QSeries) -> str:
    """Golden-file form: one coefficient per line as "n: p/q", newline-terminated."""
    return "".join(f"{n}: {c}\n" for n, c in enumerate(a.coeffs))


def parse_golden(text: str) -> QSeries:
    """Parse golden-file text back into a series."""
    coeffs: list[Fraction] = []
    for lineno, line in enumerate(text.splitlines()):
        line = line.strip()
        if not line:
            continue
        left, sep, right = line.partition(":")
        if not sep:
            raise ValueError(f"golden line {lineno + 1} lacks ':'")
        n = int(left)
        if n != len(coeffs):
            raise ValueError(f"golden line {lineno + 1} out of sequence (got {n})")
        coeffs.append(Fraction(right.strip()))
    if not coeffs:
        raise ValueError("empty golden text")
    return QSeries(coeffs)
