"""Exact Gaussian-rational scalars a + b*i with Fraction components."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rationalish = Union[int, Fraction, "GaussianRational"]


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @staticmethod
    def of(v: Rationalish) -> "GaussianRational":
        if isinstance(v, GaussianRational):
            return v
        return GaussianRational(Fraction(v), Fraction(0))

    def __add__(self, other: Rationalish) -> "GaussianRational":
        o = GaussianRational.of(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other: Rationalish) -> "GaussianRational":
        return self + (-GaussianRational.of(other))

    def __rsub__(self, other: Rationalish) -> "GaussianRational":
        return GaussianRational.of(other) + (-self)

    def __mul__(self, other: Rationalish) -> "GaussianRational":
        if not isinstance(other, (GaussianRational, int, Fraction)):
            return NotImplemented
        o = GaussianRational.of(other)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Rationalish) -> "GaussianRational":
        o = GaussianRational.of(other)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(o.re / d, -o.im / d)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def sort_key(self):
        """Total order used to pick the canonical collapse summand."""
        return (self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return "%s i" % self.im
        im = "+ %s i" % self.im if self.im > 0 else "- %s i" % (-self.im)
        if abs(self.im) == 1:
            im = "+ i" if self.im > 0 else "- i"
        return "(%s %s)" % (self.re, im)


ZERO = GaussianRational(Fraction(0), Fraction(0))
ONE = GaussianRational(Fraction(1), Fraction(0))
IMAG = GaussianRational(Fraction(0), Fraction(1))
