"""Exact Gaussian-rational scalars.

Coefficients throughout the symbolic layer are complex numbers with
rational real and imaginary parts. All arithmetic is exact; nothing here
ever rounds. Conversion to float complex happens only at the numerical
norm layer.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RatLike = Union[int, Fraction]


class GaussianRational:
    """Immutable complex number with Fraction real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: RatLike = 0, im: RatLike = 0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_one(self) -> bool:
        return self.re == 1 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other) -> "GaussianRational":
        other = as_scalar(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other) -> "GaussianRational":
        return self + (-as_scalar(other))

    def __rsub__(self, other) -> "GaussianRational":
        return as_scalar(other) + (-self)

    def __mul__(self, other) -> "GaussianRational":
        other = as_scalar(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("inverse of zero scalar")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other) -> "GaussianRational":
        return self * as_scalar(other).inverse()

    def __pow__(self, n: int) -> "GaussianRational":
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs_sq(self) -> Fraction:
        """|z|^2, exact."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing ------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- conversion ----------------------------------------------------

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        return format_scalar(self)


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def as_scalar(value) -> GaussianRational:
    """Coerce ints, Fractions and GaussianRationals; reject floats.

    Floats are rejected on purpose: the symbolic layer must stay exact.
    """
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


def format_scalar(z: GaussianRational) -> str:
    """Render like the expression grammar: 3/2, -2i, (1+1/2i)."""
    if z.is_zero():
        return "0"
    if z.im == 0:
        return str(z.re)
    if z.re == 0:
        if z.im == 1:
            return "i"
        if z.im == -1:
            return "-i"
        return f"{z.im}i"
    sign = "+" if z.im > 0 else "-"
    mag = abs(z.im)
    im_part = "i" if mag == 1 else f"{mag}i"
    return f"({z.re}{sign}{im_part})"


def parse_fraction(text: str) -> Fraction:
    """Parse "p/q" or "p" into an exact Fraction."""
    return Fraction(text.strip())
