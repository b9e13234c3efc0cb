"""Unimodular 2x2 integer matrices and their T/S generator words.

T = (1 1; 0 1) is the unit shear, S = (0 -1; 1 0) the order-4 rotation;
together they generate the full group of determinant-1 integer matrices,
and -I = S^2.  `ts_decompose` writes any such matrix as
+-T^a1 S T^a2 S ... T^ar via floor-quotient Euclidean steps on the first
column, so the letter count grows logarithmically in the lower-left entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import gcd


class Mat2:
    """Integer matrix (a b; c d) with ad - bc = 1; immutable."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int, c: int, d: int):
        if a * d - b * c != 1:
            raise ValueError(f"determinant of ({a},{b};{c},{d}) is not 1")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Mat2 is immutable")

    @classmethod
    def identity(cls) -> "Mat2":
        return cls(1, 0, 0, 1)

    @classmethod
    def t_power(cls, n: int) -> "Mat2":
        return cls(1, n, 0, 1)

    @classmethod
    def parse(cls, text: str) -> "Mat2":
        """Parse "a,b;c,d" with optional whitespace."""
        rows = text.strip().split(";")
        if len(rows) != 2:
            raise ValueError(f"matrix spec {text!r} must have two ;-separated rows")
        entries = []
        for row in rows:
            cols = row.split(",")
            if len(cols) != 2:
                raise ValueError(f"matrix row {row!r} must have two ,-separated entries")
            entries.extend(int(col.strip()) for col in cols)
        return cls(*entries)

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inv(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def mul_t_power(self, n: int) -> "Mat2":
        """self * T^n, without building the power."""
        return Mat2(self.a, self.a * n + self.b, self.c, self.c * n + self.d)

    def mul_s(self) -> "Mat2":
        """self * S."""
        return Mat2(self.b, -self.a, self.d, -self.c)

    def in_gamma0(self, N: int) -> bool:
        return self.c % N == 0

    def in_gamma1(self, N: int) -> bool:
        return self.c % N == 0 and self.a % N == 1 % N and self.d % N == 1 % N

    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __repr__(self):
        return f"Mat2({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self):
        return f"({self.a}, {self.b}; {self.c}, {self.d})"


I2 = Mat2.identity()
S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)


@dataclass(frozen=True)
class TSWord:
    """Sign plus exponents for +-T^a1 S T^a2 S ... T^ar (r-1 S letters).

    Interior exponents are nonzero; zeros may appear only at the ends.
    """

    negate: bool
    exponents: tuple[int, ...]

    def __post_init__(self):
        if len(self.exponents) < 1:
            raise ValueError("a TS word needs at least one exponent")
        if any(e == 0 for e in self.exponents[1:-1]):
            raise ValueError("interior exponents must be nonzero")

    @property
    def letters(self) -> int:
        return len(self.exponents)


WORD_LENGTH_K = 4  # letter count stays below K*log(|c|+2) + K


def _letter_cap(c: int) -> int:
    return int(WORD_LENGTH_K * math.log(abs(c) + 2)) + WORD_LENGTH_K


def _strip_letters(m: Mat2, nearest: bool, cap: int | None):
    # Each step strips T^q S from the left (the new matrix is
    # S^-1 T^-q (a b; c d)), shrinking |c| until the tail is +-T^b.
    a, b, c, d = m.entries()
    exps = []
    while c != 0:
        q = a // c
        r = a - q * c
        if nearest and 2 * abs(r) > abs(c):
            q += 1
            r -= c
        if cap is not None and len(exps) >= cap:
            return None
        exps.append(q)
        a, b, c, d = c, d, -r, -(b - q * d)
    if a == 1:
        exps.append(b)
        return TSWord(False, tuple(exps))
    exps.append(-b)
    return TSWord(True, tuple(exps))


def ts_decompose(m: Mat2) -> TSWord:
    """Euclidean T/S decomposition; deterministic, O(log|c|) exponents.

    Floor quotients are used by default, matching the worked small cases;
    their sign-flipped near-ratio-1 chains can descend arithmetically, so
    when the floor word would exceed the K*log(|c|+2) + K letter cap the
    decomposition restarts with nearest-integer quotients (ties toward
    floor), which at least halve |c| every step.
    """
    word = _strip_letters(m, nearest=False, cap=_letter_cap(m.c))
    if word is None:
        word = _strip_letters(m, nearest=True, cap=None)
    return word


def ts_reconstruct(w: TSWord) -> Mat2:
    """Exact matrix product of the word."""
    m = Mat2.t_power(w.exponents[0])
    for e in w.exponents[1:]:
        m = m.mul_s().mul_t_power(e)
    return -m if w.negate else m


def random_sl2(rng, max_len: int = 30) -> Mat2:
    """Random product of S, T, T^-1 letters."""
    m = I2
    for _ in range(rng.randint(1, max_len)):
        m = m * rng.choice((S, T, Mat2(1, -1, 0, 1)))
    return m


def random_gamma0(N: int, rng, kmin: int = 1, kmax: int = 100, d_shift: int = 0) -> Mat2:
    """Random (a b; c d) with c = N*k, 0 < a < c, gcd(a, c) = 1, det 1.

    d may be shifted by random multiples of c (up to d_shift) for variety.
    """
    while True:
        c = N * rng.randint(kmin, kmax)
        a = rng.randrange(1, c) if c > 1 else 1
        if gcd(a, c) == 1:
            break
    d = pow(a, -1, c) if c > 1 else rng.randint(-5, 5)
    if d_shift:
        d += c * rng.randint(-d_shift, d_shift)
    b = (a * d - 1) // c
    return Mat2(a, b, c, d)
