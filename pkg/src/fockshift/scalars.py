"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals."""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

__all__ = ["Gaussian", "to_scalar", "format_scalar", "parse_scalar", "exact_sqrt", "is_exact"]


class Gaussian:
    """A complex number ``re + im*i`` with rational coordinates."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, Gaussian):
            return other
        if isinstance(other, (int, Rational)):
            return Gaussian(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) + other
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) * other
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return complex(self) / other
        n = o.abs2()
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return Gaussian(
            (self.re * o.re + self.im * o.im) / n, (self.im * o.re - self.re * o.im) / n
        )

    def __rtruediv__(self, other):
        return Gaussian(other) / self

    def conjugate(self):
        return Gaussian(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self):
        root = exact_sqrt(self.abs2())
        return root if root is not None else math.sqrt(self.abs2())

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Gaussian({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


def exact_sqrt(q) -> Fraction | None:
    """Square root of a nonnegative rational if it is rational, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = q.numerator, q.denominator
    ra, rb = math.isqrt(a), math.isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


def to_scalar(value):
    """Coerce to the canonical exact type: Fraction when real, else Gaussian."""
    if isinstance(value, Gaussian):
        return value.re if value.im == 0 else value
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, (float, complex)):
        return value
    raise TypeError(f"unsupported scalar {value!r}")


def is_exact(value) -> bool:
    return isinstance(value, (int, Rational, Gaussian))


def format_scalar(value) -> str:
    """Exact string form: ``"p/q"`` for rationals, ``"a+bi"`` for Gaussians."""
    if isinstance(value, Gaussian):
        if value.im == 0:
            return str(value.re)
        if value.re == 0:
            return f"{value.im}i"
        sign = "+" if value.im > 0 else "-"
        return f"{value.re}{sign}{abs(value.im)}i"
    if isinstance(value, (int, Rational)):
        return str(Fraction(value))
    if isinstance(value, complex):
        return repr(value)
    return repr(float(value))


def parse_scalar(text: str):
    """Inverse of :func:`format_scalar` for exact inputs."""
    s = text.strip().replace(" ", "")
    if not s.endswith("i"):
        return Fraction(s)
    body = s[:-1]
    # find the sign separating real and imaginary parts (skip a leading sign)
    cut = max(body.rfind("+"), body.rfind("-"))
    if cut <= 0:
        im = Fraction(body) if body not in ("", "+", "-") else Fraction(f"{body}1")
        return Gaussian(0, im)
    re_part, im_part = body[:cut], body[cut:]
    if im_part in ("+", "-"):
        im_part += "1"
    return to_scalar(Gaussian(Fraction(re_part), Fraction(im_part)))
