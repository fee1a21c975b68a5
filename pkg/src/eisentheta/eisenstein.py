"""Exact arithmetic in Z[w] and Q(sqrt(-3)), w = exp(2*pi*i/3).

Elements of the ring are stored on the integral basis (1, w) as x + y*w,
with w*w = -1 - w.  The element lam = 1 + 2*w (= w - w**2 = sqrt(-3))
generates the ramified prime above 3, and 1/lam = (-1 - 2*w)/3, so
division by lam is exact in EisRat.  All values are immutable and all
operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True, slots=True)
class UnitPower:
    """A cube root of unity w**a, a taken mod 3."""

    a: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", self.a % 3)

    def __mul__(self, other: UnitPower) -> UnitPower:
        return UnitPower(self.a + other.a)

    def inverse(self) -> UnitPower:
        return UnitPower(-self.a)

    def __pow__(self, n: int) -> UnitPower:
        return UnitPower(self.a * n)

    def as_eisint(self) -> EisInt:
        return _UNIT_VALUES[self.a]

    def __repr__(self) -> str:
        return f"UnitPower({self.a})"


@dataclass(frozen=True, slots=True)
class EisInt:
    """The Eisenstein integer x + y*w."""

    x: int = 0
    y: int = 0

    def __add__(self, other: EisInt) -> EisInt:
        return EisInt(self.x + other.x, self.y + other.y)

    def __sub__(self, other: EisInt) -> EisInt:
        return EisInt(self.x - other.x, self.y - other.y)

    def __neg__(self) -> EisInt:
        return EisInt(-self.x, -self.y)

    def __mul__(self, other: EisInt | UnitPower | int) -> EisInt:
        if isinstance(other, int):
            return EisInt(self.x * other, self.y * other)
        if isinstance(other, UnitPower):
            other = other.as_eisint()
        if isinstance(other, EisInt):
            # (x1 + y1 w)(x2 + y2 w) with w**2 = -1 - w
            return EisInt(
                self.x * other.x - self.y * other.y,
                self.x * other.y + self.y * other.x - self.y * other.y,
            )
        return NotImplemented

    def __rmul__(self, other: int) -> EisInt:
        return self * other

    def conjugate(self) -> EisInt:
        """Complex conjugate: conj(x + y*w) = (x - y) - y*w."""
        return EisInt(self.x - self.y, -self.y)

    def norm(self) -> int:
        """|x + y*w|**2 = x**2 - x*y + y**2; multiplicative, zero iff zero."""
        return self.x * self.x - self.x * self.y + self.y * self.y

    def trace(self) -> int:
        """T(a) = a + conj(a) = 2x - y."""
        return 2 * self.x - self.y

    def trace_div_lambda(self) -> int:
        """T(a/lam) = y.

        T(a/lam) = (a - conj(a))/lam because conj(lam) = -lam, and
        a - conj(a) = y + 2*y*w = y*lam.
        """
        return self.y

    def chi(self) -> UnitPower:
        """Residue character mod lam: chi(a) = w**((x + y) mod 3).

        (w - 1)/lam = 1 + w is integral, so w is congruent to 1 mod lam
        and x + y*w is congruent to x + y.  The character is trivial
        exactly on multiples of lam, and turns sums into products:
        chi(a + b) = chi(a) * chi(b).
        """
        return UnitPower(self.x + self.y)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def divisible_by_lambda(self) -> bool:
        """Exact test for lam | a, via a*conj(lam) = a*(-lam) in 3*O."""
        prod = self * LAMBDA.conjugate()
        return prod.x % 3 == 0 and prod.y % 3 == 0

    def __repr__(self) -> str:
        return f"EisInt({self.x}, {self.y})"


ZERO = EisInt(0, 0)
ONE = EisInt(1, 0)
OMEGA = EisInt(0, 1)
LAMBDA = EisInt(1, 2)

_UNIT_VALUES = (ONE, OMEGA, EisInt(-1, -1))


@dataclass(frozen=True, slots=True)
class EisRat:
    """An element num/den of Q(sqrt(-3)), den a positive integer.

    Kept reduced: den > 0 and no rational prime divides den together with
    both coordinates of num.
    """

    num: EisInt = ZERO
    den: int = 1

    def __post_init__(self) -> None:
        if self.den == 0:
            raise ZeroDivisionError("EisRat with zero denominator")
        num, den = self.num, self.den
        if den < 0:
            num, den = -num, -den
        g = gcd(gcd(abs(num.x), abs(num.y)), den)
        if g > 1:
            num = EisInt(num.x // g, num.y // g)
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_eisint(cls, a: EisInt) -> EisRat:
        return cls(a, 1)

    @classmethod
    def from_int(cls, n: int) -> EisRat:
        return cls(EisInt(n, 0), 1)

    def _coerce(self, other: EisRat | EisInt | int) -> EisRat | None:
        if isinstance(other, EisRat):
            return other
        if isinstance(other, EisInt):
            return EisRat(other, 1)
        if isinstance(other, int):
            return EisRat(EisInt(other, 0), 1)
        return None

    def __add__(self, other: EisRat | EisInt | int) -> EisRat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisRat(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other: EisRat | EisInt | int) -> EisRat:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisRat(self.num * o.den - o.num * self.den, self.den * o.den)

    def __neg__(self) -> EisRat:
        return EisRat(-self.num, self.den)

    def __mul__(self, other: EisRat | EisInt | UnitPower | int) -> EisRat:
        if isinstance(other, UnitPower):
            other = other.as_eisint()
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisRat(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def conjugate(self) -> EisRat:
        return EisRat(self.num.conjugate(), self.den)

    def div_lambda(self) -> EisRat:
        """Exact division by lam, i.e. multiplication by (-1 - 2*w)/3."""
        return self * INV_LAMBDA

    def norm(self) -> Fraction:
        return Fraction(self.num.norm(), self.den * self.den)

    def trace(self) -> Fraction:
        return Fraction(self.num.trace(), self.den)

    def trace_div_lambda(self) -> Fraction:
        return Fraction(self.num.trace_div_lambda(), self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_integral(self) -> bool:
        return self.den == 1

    def as_eisint(self) -> EisInt:
        if self.den != 1:
            raise ValueError(f"{self!r} is not integral")
        return self.num

    def __repr__(self) -> str:
        if self.den == 1:
            return f"EisRat({self.num.x}, {self.num.y})"
        return f"EisRat({self.num.x}, {self.num.y}, den={self.den})"


RAT_ZERO = EisRat(ZERO, 1)
INV_LAMBDA = EisRat(EisInt(-1, -2), 3)
