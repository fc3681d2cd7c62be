"""Exact arithmetic in the modular group and its level-4 congruence subgroups.

A :class:`Mat2Z` is a unit-determinant 2x2 integer matrix.  The two
generators in play are

    T = [[1, 1], [0, 1]]        acting as  tau -> tau + 1
    U = [[1, 0], [4, 1]]        acting as  tau -> tau / (4 tau + 1)

which generate the subgroup of matrices congruent to [[1, *], [0, 1]] mod 4.
:func:`decompose` writes any element of that subgroup as a word in T and U
(a :class:`GenWord`), and :func:`reduce_to_fundamental` moves any point of
the upper half plane into the fundamental domain

    D = { s + it : 0 <= s <= 1, |tau - 1/4| >= 1/4, |tau - 3/4| >= 1/4 }

returning the word that certifies the reduction.  Matrices and words are
exact; only the points are floating complex numbers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

# Boundary membership of D is resolved in favour of "inside".
DOMAIN_EPS = 1e-12

# Reduction is finite by proper discontinuity; the bound only guards
# floating-point edge cases very close to the real axis.
REDUCE_MAX_STEPS = 10**6


class MembershipError(ValueError):
    """A matrix was outside the congruence subgroup an operation requires."""


@dataclass(frozen=True)
class Mat2Z:
    """Integer matrix [[a, b], [c, d]] with determinant exactly 1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for entry in (self.a, self.b, self.c, self.d):
            if not isinstance(entry, int):
                raise TypeError("matrix entries must be integers")
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self.format()} is not 1")

    def __mul__(self, other: "Mat2Z") -> "Mat2Z":
        if not isinstance(other, Mat2Z):
            return NotImplemented
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inv(self) -> "Mat2Z":
        return Mat2Z(self.d, -self.b, -self.c, self.a)

    def __neg__(self) -> "Mat2Z":
        # -Id has determinant 1, so negation stays in the group.
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> "Mat2Z":
        if k < 0:
            return self.inv() ** (-k)
        result = IDENTITY
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def format(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    def __str__(self) -> str:
        return self.format()


IDENTITY = Mat2Z(1, 0, 0, 1)
MAT_T = Mat2Z(1, 1, 0, 1)
MAT_U = Mat2Z(1, 0, 4, 1)
MAT_S = Mat2Z(0, -1, 1, 0)

_MATRIX_RE = re.compile(
    r"\[\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\]"
)


def parse_matrix(text: str) -> Mat2Z:
    """Parse the text format "[[a,b],[c,d]]"."""
    m = _MATRIX_RE.fullmatch(text.strip())
    if not m:
        raise ValueError(f"malformed matrix text {text!r}; expected [[a,b],[c,d]]")
    return Mat2Z(*(int(g) for g in m.groups()))


def mat_mul(x: Mat2Z, y: Mat2Z) -> Mat2Z:
    return x * y


def mat_inv(x: Mat2Z) -> Mat2Z:
    return x.inv()


def mobius(m: Mat2Z, tau: complex) -> complex:
    """The action (a tau + b) / (c tau + d) on the upper half plane."""
    if tau.imag <= 0:
        raise ValueError("tau must satisfy im(tau) > 0")
    return (m.a * tau + m.b) / (m.c * tau + m.d)


# --------------------------------------------------------------- congruences

def in_gamma4(m: Mat2Z) -> bool:
    """Congruent to the identity mod 4."""
    return (
        m.a % 4 == 1 and m.d % 4 == 1 and m.b % 4 == 0 and m.c % 4 == 0
    )


def in_gamma1_4(m: Mat2Z) -> bool:
    """Congruent to [[1, *], [0, 1]] mod 4."""
    return m.a % 4 == 1 and m.d % 4 == 1 and m.c % 4 == 0


def in_gamma0_4(m: Mat2Z) -> bool:
    """Congruent to [[*, *], [0, *]] mod 4."""
    return m.c % 4 == 0


def count_sl2_z4() -> int:
    """Number of 2x2 matrices over the integers mod 4 with determinant 1 mod 4."""
    return sum(
        1
        for a, b, c, d in product(range(4), repeat=4)
        if (a * d - b * c) % 4 == 1
    )


def congruence_indices() -> dict[str, int]:
    """The index computations, all from one enumeration of SL(2, Z_4).

    Reduction mod 4 is onto, so the index of the level-4 principal subgroup
    equals the order of SL(2, Z_4); the other indices divide it by the sizes
    of the corresponding residue subgroups.
    """
    order = count_sl2_z4()
    gamma1_image = sum(
        1
        for a, b, c, d in product(range(4), repeat=4)
        if (a * d - b * c) % 4 == 1 and a == 1 and d == 1 and c == 0
    )
    gamma0_image = sum(
        1
        for a, b, c, d in product(range(4), repeat=4)
        if (a * d - b * c) % 4 == 1 and c == 0
    )
    return {
        "sl2_z4_order": order,
        "gamma4_index": order,
        "gamma1_4_index": order // gamma1_image,
        "gamma0_4_index": order // gamma0_image,
        # -Id is not in the subgroup, so passing to PSL halves the index.
        "gamma1_4_psl_index": order // gamma1_image // 2,
    }


# --------------------------------------------------------------------- words

_WORD_LETTER_RE = re.compile(r"([TU])(?:\^(-?\d+))?")


@dataclass(frozen=True)
class GenWord:
    """A product of signed powers of T and U, e.g. T^2 U^-1 T^3.

    Normalised on construction: adjacent letters use distinct generators and
    no exponent is zero.  The empty word is the identity.
    """

    letters: tuple[tuple[str, int], ...]

    def __init__(self, letters=()):
        merged: list[list] = []
        for gen, exp in letters:
            if gen not in ("T", "U"):
                raise ValueError(f"unknown generator {gen!r}")
            if exp == 0:
                continue
            if merged and merged[-1][0] == gen:
                merged[-1][1] += exp
                if merged[-1][1] == 0:
                    merged.pop()
            else:
                merged.append([gen, exp])
        object.__setattr__(
            self, "letters", tuple((g, e) for g, e in merged)
        )

    def evaluate(self) -> Mat2Z:
        """The ordered product of the letter matrices (exact)."""
        result = IDENTITY
        for gen, exp in self.letters:
            if gen == "T":
                result = result * Mat2Z(1, exp, 0, 1)
            else:
                result = result * Mat2Z(1, 0, 4 * exp, 1)
        return result

    def __mul__(self, other: "GenWord") -> "GenWord":
        if not isinstance(other, GenWord):
            return NotImplemented
        return GenWord(self.letters + other.letters)

    def inv(self) -> "GenWord":
        return GenWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def format(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"{g}^{e}" for g, e in self.letters)

    def __str__(self) -> str:
        return self.format()


def parse_word(text: str) -> GenWord:
    """Parse the text format "T^2 U^-1 T^3" ("1" is the empty word)."""
    text = text.strip()
    if text in ("", "1"):
        return GenWord()
    letters = []
    for part in text.split():
        m = _WORD_LETTER_RE.fullmatch(part)
        if not m:
            raise ValueError(f"malformed word letter {part!r}")
        letters.append((m.group(1), int(m.group(2) or 1)))
    return GenWord(letters)


def word_eval(word: GenWord) -> Mat2Z:
    return word.evaluate()


def _nearest(p: int, q: int) -> int:
    """Nearest integer to p/q (any nonzero q); ties round down."""
    if q < 0:
        p, q = -p, -q
    quot, rem = divmod(p, q)
    if 2 * rem > q:
        return quot + 1
    return quot


def decompose(m: Mat2Z) -> GenWord:
    """Write a matrix congruent to [[1,*],[0,1]] mod 4 as a word in T and U.

    Euclidean descent on the first column: left-multiplying by U^k adds 4*k*a
    to c, and by T^k adds k*c to a.  Because gcd(a, c) = 1 with a odd and c
    divisible by 4, alternating nearest-integer reductions strictly shrink
    |c| until c = 0, at which point the congruence conditions force the
    remaining matrix to be a pure power of T.  The returned word w satisfies
    word_eval(w) == m exactly.
    """
    if not in_gamma1_4(m):
        raise MembershipError(f"{m.format()} is not congruent to [[1,*],[0,1]] mod 4")
    applied: list[tuple[str, int]] = []
    cur = m
    # |c| stays divisible by 4 and strictly shrinks at least every second
    # round, so this bound is unreachable for any valid input.  (Powers of
    # the parabolic element T U^-1 really do need about |c|/4 rounds; their
    # canonical words are that long.)
    step_bound = abs(cur.c) // 2 + 8
    steps = 0
    while cur.c != 0:
        steps += 1
        if steps > step_bound:
            raise RuntimeError(f"descent failed to terminate for {m.format()}")
        k = -_nearest(cur.c, 4 * cur.a)
        if k:
            applied.append(("U", k))
            cur = Mat2Z(1, 0, 4 * k, 1) * cur
        if cur.c == 0:
            break
        k = -_nearest(cur.a, cur.c)
        if k:
            applied.append(("T", k))
            cur = Mat2Z(1, k, 0, 1) * cur
    # cur = [[a, b], [0, d]] with ad = 1 and a = d = 1 mod 4, so a = d = 1.
    if cur.a != 1:
        raise RuntimeError(f"descent left a non-translation remainder for {m.format()}")
    # cur = s_r ... s_1 m, so m = s_1^-1 ... s_r^-1 cur: same order, negated.
    letters = [(gen, -exp) for gen, exp in applied]
    letters.append(("T", cur.b))
    return GenWord(letters)


# ------------------------------------------------------- fundamental domain

def in_fundamental_domain(tau: complex, eps: float = DOMAIN_EPS) -> bool:
    """Membership in D, with boundary points admitted within eps."""
    if tau.imag <= 0:
        return False
    if tau.real < -eps or tau.real > 1 + eps:
        return False
    if abs(tau - 0.25) < 0.25 - eps:
        return False
    if abs(tau - 0.75) < 0.25 - eps:
        return False
    return True


_LEFT_DISC_STEP = GenWord([("U", -1)])
_RIGHT_DISC_STEP = GenWord([("U", 1), ("T", -1)])


def reduce_to_fundamental(tau: complex) -> tuple[complex, GenWord]:
    """Move tau into D; returns (tau', w) with tau' = mobius(word_eval(w), tau).

    Loop: translate the real part into [0, 1) by a power of T; if the point
    is strictly inside the left removed disc apply U^-1, if inside the right
    one apply U T^-1; otherwise stop.  Each disc step strictly increases the
    imaginary part (|c tau + d| < 1 inside the discs), and only finitely
    many denominators satisfy that, so the loop terminates.  The word is
    exact; the current point is always recomputed from the accumulated
    matrix so the certificate replays to the returned point by construction.
    """
    if tau.imag <= 0:
        raise ValueError("tau must satisfy im(tau) > 0")
    word = GenWord()
    mat = IDENTITY
    cur = tau
    for _ in range(REDUCE_MAX_STEPS):
        shift = -int(cur.real // 1)
        if shift:
            step = GenWord([("T", shift)])
            word = step * word
            mat = step.evaluate() * mat
            cur = mobius(mat, tau)
        if abs(cur - 0.25) < 0.25 - DOMAIN_EPS:
            step = _LEFT_DISC_STEP
        elif abs(cur - 0.75) < 0.25 - DOMAIN_EPS:
            step = _RIGHT_DISC_STEP
        else:
            return cur, word
        word = step * word
        mat = step.evaluate() * mat
        cur = mobius(mat, tau)
    raise RuntimeError(f"reduction failed to terminate for tau = {tau}")


def stereographic(q: complex) -> tuple[float, float, float]:
    """Inverse stereographic projection of q = u + iv onto the unit sphere.

    Returns (4u, 4v, u^2 + v^2 - 4) / (u^2 + v^2 + 4), a unit vector; the
    origin maps to the South Pole (0, 0, -1).
    """
    u, v = q.real, q.imag
    r2 = u * u + v * v
    scale = 1.0 / (r2 + 4.0)
    return (4.0 * u * scale, 4.0 * v * scale, (r2 - 4.0) * scale)
