"""Exact arithmetic over Q and Q(i).

Rationals are plain :class:`fractions.Fraction` values.  Gaussian rationals
are stored as a triple of integers ``(re_num, im_num, den)`` over a common
positive denominator, which keeps multiplication to a single gcd.

Gamma-function ratios are never evaluated through a Gamma function: they
are finite Pochhammer products, so they stay finite at the nonpositive
integers where Gamma itself has poles.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction

__all__ = [
    "Rational",
    "GaussianRational",
    "I",
    "ONE",
    "ZERO",
    "PoleError",
    "NonRealError",
    "as_gaussian",
    "parse_rational",
    "render_rational",
    "parse_gaussian",
    "rising_factorial",
    "gamma_ratio",
    "rational_floor",
]


class PoleError(ZeroDivisionError):
    """A Gamma ratio that is not a finite product (genuine pole)."""


class NonRealError(ValueError):
    """An operation that needs a real value received a nonzero imaginary part."""


class GaussianRational:
    """An element ``re + im*i`` of Q(i).

    Instances are immutable and hashable; ints and Fractions compare equal to
    the corresponding real Gaussian rational.

    >>> z = GaussianRational(Fraction(1, 2), 1)
    >>> str(z * z)
    '-3/4+1*i'
    """

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, im=0):
        re = Fraction(re)
        im = Fraction(im)
        d = re.denominator * im.denominator // math.gcd(re.denominator, im.denominator)
        self._a = re.numerator * (d // re.denominator)
        self._b = im.numerator * (d // im.denominator)
        self._d = d

    @classmethod
    def _make(cls, a: int, b: int, d: int) -> "GaussianRational":
        if d < 0:
            a, b, d = -a, -b, -d
        g = math.gcd(a, b, d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._d = d
        return obj

    # -- accessors -----------------------------------------------------
    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def im(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def is_real(self) -> bool:
        return self._b == 0

    def is_integer(self) -> bool:
        return self._b == 0 and self._d == 1

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._make(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Squared absolute value ``re**2 + im**2``."""
        return Fraction(self._a * self._a + self._b * self._b, self._d * self._d)

    def __int__(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self._a

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        if self._d == o._d:
            return GaussianRational._make(self._a + o._a, self._b + o._b, self._d)
        return GaussianRational._make(
            self._a * o._d + o._a * self._d,
            self._b * o._d + o._b * self._d,
            self._d * o._d,
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._make(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        a, b, d = self._a, self._b, self._d
        c, e, f = o._a, o._b, o._d
        if b == 0 and e == 0:
            return GaussianRational._make(a * c, 0, d * f)
        return GaussianRational._make(a * c - b * e, a * e + b * c, d * f)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(i)")
        a, b, d = self._a, self._b, self._d
        n = a * a + b * b
        # (a+bi)/d inverted = d(a-bi)/(a^2+b^2)
        return GaussianRational._make(d * a, -d * b, n)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._a == o._a and self._b == o._b and self._d == o._d

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __bool__(self):
        return not self.is_zero()

    # -- text -----------------------------------------------------------
    def __str__(self):
        re_, im_ = self.re, self.im
        if im_ == 0:
            return render_rational(re_)
        if re_ == 0:
            return f"{render_rational(im_)}*i"
        sign = "+" if im_ > 0 else "-"
        return f"{render_rational(re_)}{sign}{render_rational(abs(im_))}*i"

    def __repr__(self):
        return f"GaussianRational('{self}')"


Number = Union[int, Fraction, GaussianRational]


def _coerce(x):
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, int):
        return GaussianRational._make(x, 0, 1)
    if isinstance(x, _RationalABC):
        return GaussianRational._make(x.numerator, 0, x.denominator)
    return NotImplemented


def as_gaussian(x) -> GaussianRational:
    """Coerce an int, Fraction, GaussianRational or string to Q(i)."""
    if isinstance(x, str):
        return parse_gaussian(x)
    o = _coerce(x)
    if o is NotImplemented:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(i)")
    return o


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


# -- text format ---------------------------------------------------------

_RAT = r"[+-]?\d+(?:/\d+)?"
_RAT_RE = re.compile(rf"^\s*({_RAT})\s*$")
_GAUSS_RE = re.compile(
    rf"""^\s*
    (?:(?P<re>{_RAT})(?=\s*[+-]|\s*$))?      # real part
    \s*
    (?:(?P<im>[+-]?\s*(?:\d+(?:/\d+)?)?)\s*\*?\s*i)?   # imaginary coefficient
    \s*$""",
    re.VERBOSE,
)


def render_rational(q) -> str:
    """Canonical ``p/q`` text (lowest terms, positive denominator)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(m.group(1))


def parse_gaussian(text: str) -> GaussianRational:
    """Parse ``p/q``, ``r/s*i`` or ``p/q+r/s*i`` (also ``i``, ``-i``, ``2i``)."""
    m = _GAUSS_RE.match(text)
    if not m or (m.group("re") is None and m.group("im") is None):
        raise ValueError(f"not a Gaussian rational: {text!r}")
    re_ = Fraction(m.group("re")) if m.group("re") is not None else Fraction(0)
    im_txt = m.group("im")
    if im_txt is None:
        im_ = Fraction(0)
    else:
        im_txt = im_txt.replace(" ", "")
        if im_txt in ("", "+"):
            im_ = Fraction(1)
        elif im_txt == "-":
            im_ = Fraction(-1)
        else:
            im_ = Fraction(im_txt)
    return GaussianRational(re_, im_)


# -- Gamma ratios --------------------------------------------------------

def rising_factorial(x, n: int) -> GaussianRational:
    """Pochhammer symbol ``x (x+1) ... (x+n-1)``; equals 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("rising_factorial needs n >= 0")
    x = as_gaussian(x)
    result = ONE
    for j in range(n):
        result = result * (x + j)
    return result


def gamma_ratio(x, n: int) -> GaussianRational:
    """``Gamma(x+n) / Gamma(x)`` for any integer shift ``n``, as a finite product.

    Raises :class:`PoleError` when ``n < 0`` and the product in the
    denominator vanishes.
    """
    x = as_gaussian(x)
    if n >= 0:
        return rising_factorial(x, n)
    denom = rising_factorial(x + n, -n)
    if denom.is_zero():
        raise PoleError(f"Gamma({x}{n:+d})/Gamma({x}) has a pole")
    return denom.inverse()


def rational_floor(x) -> int:
    """Greatest integer not exceeding a real rational ``x``."""
    if isinstance(x, GaussianRational):
        if not x.is_real():
            raise NonRealError(f"floor of non-real value {x}")
        return math.floor(x.re)
    return math.floor(Fraction(x))
