"""Exact arithmetic in Q(√2) and Z[√2].

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator. A :class:`QuadRat` ``a + b√2`` is therefore
canonical as soon as it is built, and equality is a coordinate comparison.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Union

RationalLike = Union[int, Fraction]


def _as_fraction(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


class QuadRat:
    """An element ``a + b√2`` of Q(√2) with exact rational coordinates."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: RationalLike = 0, b: RationalLike = 0) -> None:
        self._a = _as_fraction(a)
        self._b = _as_fraction(b)

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @classmethod
    def coerce(cls, x: QuadRat | RationalLike) -> QuadRat:
        if isinstance(x, QuadRat):
            return x
        return cls(x, 0)

    def __repr__(self) -> str:
        return f"QuadRat({self._a}, {self._b})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        if self._a == 0:
            return f"{self._b}√2"
        sign = "+" if self._b > 0 else "-"
        return f"{self._a}{sign}{abs(self._b)}√2"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadRat):
            return self._a == other._a and self._b == other._b
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b))

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    def __neg__(self) -> QuadRat:
        return QuadRat(-self._a, -self._b)

    def __pos__(self) -> QuadRat:
        return self

    def __add__(self, other: QuadRat | RationalLike) -> QuadRat:
        if not isinstance(other, (QuadRat, int, Fraction)):
            return NotImplemented
        other = QuadRat.coerce(other)
        return QuadRat(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other: QuadRat | RationalLike) -> QuadRat:
        if not isinstance(other, (QuadRat, int, Fraction)):
            return NotImplemented
        other = QuadRat.coerce(other)
        return QuadRat(self._a - other._a, self._b - other._b)

    def __rsub__(self, other: RationalLike) -> QuadRat:
        return QuadRat.coerce(other) - self

    def __mul__(self, other: QuadRat | RationalLike) -> QuadRat:
        if isinstance(other, (int, Fraction)):
            return QuadRat(self._a * other, self._b * other)
        if not isinstance(other, QuadRat):
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QuadRat(a1 * a2 + 2 * b1 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def __truediv__(self, other: QuadRat | RationalLike) -> QuadRat:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of QuadRat by zero")
            return QuadRat(self._a / other, self._b / other)
        if not isinstance(other, QuadRat):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: RationalLike) -> QuadRat:
        return QuadRat.coerce(other) * self.inverse()

    def __pow__(self, e: int) -> QuadRat:
        return qr_pow(self, e)

    def conj(self) -> QuadRat:
        return QuadRat(self._a, -self._b)

    def norm(self) -> Fraction:
        return self._a * self._a - 2 * self._b * self._b

    def inverse(self) -> QuadRat:
        nrm = self.norm()
        if nrm == 0:
            # a² = 2b² has no rational solution besides 0
            raise ZeroDivisionError("QuadRat zero has no inverse")
        return QuadRat(self._a / nrm, -self._b / nrm)

    def is_rational(self) -> bool:
        return self._b == 0

    def is_integral(self) -> bool:
        return self._a.denominator == 1 and self._b.denominator == 1

    def rational_part(self) -> Fraction:
        """Return ``a``, insisting that the √2 coordinate vanishes."""
        if self._b != 0:
            raise ValueError(f"{self} is not rational")
        return self._a


class QuadInt:
    """An element ``a + b√2`` of the ring Z[√2]."""

    __slots__ = ("_a", "_b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        if not isinstance(a, int) or not isinstance(b, int):
            raise TypeError("QuadInt coordinates must be int")
        self._a = a
        self._b = b

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    def __repr__(self) -> str:
        return f"QuadInt({self._a}, {self._b})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadInt):
            return self._a == other._a and self._b == other._b
        if isinstance(other, QuadRat):
            return other == self.to_quadrat()
        if isinstance(other, int):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.to_quadrat())

    def __neg__(self) -> QuadInt:
        return QuadInt(-self._a, -self._b)

    def __add__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            other = QuadInt(other)
        if not isinstance(other, QuadInt):
            return NotImplemented
        return QuadInt(self._a + other._a, self._b + other._b)

    __radd__ = __add__

    def __sub__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            other = QuadInt(other)
        if not isinstance(other, QuadInt):
            return NotImplemented
        return QuadInt(self._a - other._a, self._b - other._b)

    def __mul__(self, other: QuadInt | int) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(self._a * other, self._b * other)
        if not isinstance(other, QuadInt):
            return NotImplemented
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        return QuadInt(a1 * a2 + 2 * b1 * b2, a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> QuadInt:
        if e < 0:
            if not self.is_unit():
                raise ValueError("negative power of a non-unit leaves Z[√2]")
            # units satisfy x⁻¹ = ±conj(x)
            base = self.conj() * self.norm()
            e = -e
        else:
            base = self
        result = QuadInt(1)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conj(self) -> QuadInt:
        return QuadInt(self._a, -self._b)

    def norm(self) -> int:
        return self._a * self._a - 2 * self._b * self._b

    def is_unit(self) -> bool:
        return self.norm() in (1, -1)

    def to_quadrat(self) -> QuadRat:
        return QuadRat(self._a, self._b)


def qr_add(x: QuadRat, y: QuadRat) -> QuadRat:
    return QuadRat.coerce(x) + y


def qr_mul(x: QuadRat, y: QuadRat) -> QuadRat:
    return QuadRat.coerce(x) * y


def qr_conj(x: QuadRat) -> QuadRat:
    return QuadRat.coerce(x).conj()


def qr_norm(x: QuadRat) -> Fraction:
    return QuadRat.coerce(x).norm()


def qr_inv(x: QuadRat) -> QuadRat:
    return QuadRat.coerce(x).inverse()


def qr_pow(x: QuadRat, e: int) -> QuadRat:
    """Raise ``x`` to an integer power by binary exponentiation.

    Negative exponents go through the exact field inverse, so ``x`` must be
    nonzero in that case (``ZeroDivisionError`` otherwise).
    """
    x = QuadRat.coerce(x)
    if e < 0:
        x = x.inverse()
        e = -e
    result = ONE
    while e:
        if e & 1:
            result = result * x
        x = x * x
        e >>= 1
    return result


ZERO = QuadRat(0, 0)
ONE = QuadRat(1, 0)
SQRT2 = QuadRat(0, 1)

# Roots of x² - 6x + 1 and their "half-step" square roots. The branch is
# fixed here once: GAMMA² = ALPHA, DELTA² = BETA, GAMMA·DELTA = -1.
ALPHA = QuadRat(3, 2)
BETA = QuadRat(3, -2)
GAMMA = QuadRat(1, 1)
DELTA = QuadRat(1, -1)
