"""Exact arithmetic on numbers ``(a + b*sqrt(d)) / c``.

Every letter decision made elsewhere in the package (mechanical words,
interval membership, three-gap hits) goes through this module, so nothing
depends on floating point.  Values are kept in a canonical form:

* ``c > 0`` and ``gcd(a, b, c) == 1``;
* ``d`` is square-free and greater than 1, or the number is rational, in
  which case ``b == 0`` and ``d == 0``.

Two values are equal iff their canonical tuples are identical.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import List, Union

from .errors import MixedRadicands, SturmrcError, UnsupportedRadicand, ZeroDenominator

__all__ = [
    "QuadraticReal",
    "qr_make",
    "qr_cmp",
    "qr_floor",
    "qr_fract",
    "qr_add",
    "qr_sub",
    "qr_mul_int",
    "parse_number",
    "floor_progression",
]

Number = Union["QuadraticReal", int, Fraction]


def _sign(n: int) -> int:
    return (n > 0) - (n < 0)


def _square_free(d: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``d == s*s*r`` and ``r`` square-free."""
    s, r = 1, d
    p = 2
    while p * p <= r:
        pp = p * p
        while r % pp == 0:
            r //= pp
            s *= p
        p += 1 if p == 2 else 2
    return s, r


def _sign_root(p: int, q: int, m: int) -> int:
    """Sign of ``p + q*sqrt(m)`` for integers, ``m >= 0``."""
    if q == 0 or m == 0:
        return _sign(p)
    sq = _sign(q)
    if p == 0 or _sign(p) == sq:
        return sq
    diff = p * p - q * q * m
    if diff > 0:
        return _sign(p)
    if diff < 0:
        return sq
    return 0


def _sign_two_roots(p: int, q: int, m: int, r: int, n: int) -> int:
    """Sign of ``p + q*sqrt(m) + r*sqrt(n)``; rationalizes both radicals."""
    if r == 0 or n == 0:
        return _sign_root(p, q, m)
    if q == 0 or m == 0:
        return _sign_root(p, r, n)
    # s = sign(q sqrt m + r sqrt n)
    if _sign(q) == _sign(r):
        s = _sign(q)
    else:
        diff = q * q * m - r * r * n
        s = _sign(q) if diff > 0 else _sign(r) if diff < 0 else 0
    if s == 0 or p == 0:
        return s or _sign(p)
    if _sign(p) == s:
        return s
    # opposite signs: compare p^2 with (q sqrt m + r sqrt n)^2
    t = _sign_root(p * p - q * q * m - r * r * n, -2 * q * r, m * n)
    if t > 0:
        return _sign(p)
    if t < 0:
        return s
    return 0


class QuadraticReal:
    """The real number ``(a + b*sqrt(d)) / c`` in canonical form.

    >>> QuadraticReal(3, -1, 2, 5)
    QuadraticReal(3, -1, 2, 5)
    >>> QuadraticReal(0, 1, 1, 8)
    QuadraticReal(0, 2, 1, 2)
    >>> QuadraticReal(2, 0, 4, 7)
    QuadraticReal(1, 0, 2, 0)
    """

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: int, b: int = 0, c: int = 1, d: int = 0):
        a, b, c, d = int(a), int(b), int(c), int(d)
        if c == 0:
            raise ZeroDenominator("denominator c must be nonzero")
        if d < 0:
            raise UnsupportedRadicand(f"radicand must be non-negative, got {d}")
        if d > 1:
            s, d = _square_free(d)
            b *= s
        if d == 1:
            a, b, d = a + b, 0, 0
        elif d == 0:
            b = 0
        if b == 0:
            d = 0
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(a, b, c)
        self.a, self.b, self.c, self.d = a // g, b // g, c // g, d

    @classmethod
    def from_fraction(cls, x: Union[int, Fraction]) -> "QuadraticReal":
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator, 0)

    @classmethod
    def coerce(cls, x: Number) -> "QuadraticReal":
        if isinstance(x, QuadraticReal):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.from_fraction(x)
        raise TypeError(f"cannot convert {type(x).__name__} to QuadraticReal")

    # -- inspection ---------------------------------------------------------

    def canonical(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    @property
    def is_irrational(self) -> bool:
        return self.b != 0 and self.d > 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.a, self.c)

    def __repr__(self) -> str:
        return f"QuadraticReal({self.a}, {self.b}, {self.c}, {self.d})"

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.a) if self.c == 1 else f"{self.a}/{self.c}"
        sgn = "-" if self.b < 0 else "+"
        b = abs(self.b)
        rad = f"√{self.d}" if b == 1 else f"{b}√{self.d}"
        num = rad if self.a == 0 and sgn == "+" else (
            f"-{rad}" if self.a == 0 else f"{self.a} {sgn} {rad}")
        return num if self.c == 1 else f"({num})/{self.c}"

    def to_text(self) -> str:
        """CLI wire format: ``rat:p/q`` for rationals, else ``qr:a,b,c,d``."""
        if self.is_rational:
            return f"rat:{self.a}/{self.c}"
        return f"qr:{self.a},{self.b},{self.c},{self.d}"

    def __float__(self) -> float:
        # diagnostics only; never used for decisions
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    # -- ordering -------------------------------------------------------------

    def compare(self, other: Number) -> int:
        y = QuadraticReal.coerce(other)
        if self.canonical() == y.canonical():
            return 0
        # c1*c2*(x - y) = P + Q sqrt(d1) - R sqrt(d2)
        p = self.a * y.c - y.a * self.c
        q = self.b * y.c
        r = -y.b * self.c
        if self.d == y.d or y.d == 0 or self.d == 0:
            m = self.d or y.d
            return _sign_root(p, q + r, m)
        return _sign_two_roots(p, q, self.d, r, y.d)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadraticReal.from_fraction(other)
        if not isinstance(other, QuadraticReal):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self) -> int:
        if self.is_rational:
            return hash(Fraction(self.a, self.c))
        return hash(self.canonical())

    def __lt__(self, other: Number) -> bool:
        return self.compare(other) < 0

    def __le__(self, other: Number) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: Number) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: Number) -> bool:
        return self.compare(other) >= 0

    def sign(self) -> int:
        return _sign_root(self.a, self.b, self.d)

    # -- arithmetic -----------------------------------------------------------

    def _radicand_with(self, other: "QuadraticReal") -> int:
        if self.d and other.d and self.d != other.d:
            raise MixedRadicands(
                f"cannot combine sqrt({self.d}) and sqrt({other.d}) exactly")
        return self.d or other.d

    def __add__(self, other: Number) -> "QuadraticReal":
        try:
            y = QuadraticReal.coerce(other)
        except TypeError:
            return NotImplemented
        d = self._radicand_with(y)
        return QuadraticReal(self.a * y.c + y.a * self.c,
                             self.b * y.c + y.b * self.c, self.c * y.c, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticReal":
        return QuadraticReal(-self.a, -self.b, self.c, self.d)

    def __sub__(self, other: Number) -> "QuadraticReal":
        try:
            y = QuadraticReal.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-y)

    def __rsub__(self, other: Number) -> "QuadraticReal":
        return QuadraticReal.coerce(other) - self

    def __mul__(self, other: Union[int, Fraction]) -> "QuadraticReal":
        if isinstance(other, bool) or not isinstance(other, (int, Fraction)):
            return NotImplemented
        f = Fraction(other)
        return QuadraticReal(self.a * f.numerator, self.b * f.numerator,
                             self.c * f.denominator, self.d)

    __rmul__ = __mul__

    def floor(self) -> int:
        """Exact floor via integer square-root bracketing of ``b*sqrt(d)``."""
        if self.b == 0:
            return self.a // self.c
        s = math.isqrt(self.b * self.b * self.d)
        # d square-free > 1, so b*sqrt(d) is never an integer
        n = self.a + s if self.b > 0 else self.a - s - 1
        return n // self.c

    def __floor__(self) -> int:
        return self.floor()

    def fract(self) -> "QuadraticReal":
        return self - self.floor()


def qr_make(a: int, b: int, c: int, d: int) -> QuadraticReal:
    return QuadraticReal(a, b, c, d)


def qr_cmp(x: Number, y: Number) -> int:
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``."""
    return QuadraticReal.coerce(x).compare(y)


def qr_floor(x: Number) -> int:
    return QuadraticReal.coerce(x).floor()


def qr_fract(x: Number) -> QuadraticReal:
    return QuadraticReal.coerce(x).fract()


def qr_add(x: Number, y: Number) -> QuadraticReal:
    return QuadraticReal.coerce(x) + QuadraticReal.coerce(y)


def qr_sub(x: Number, y: Number) -> QuadraticReal:
    return QuadraticReal.coerce(x) - QuadraticReal.coerce(y)


def qr_mul_int(x: Number, n: int) -> QuadraticReal:
    return QuadraticReal.coerce(x) * int(n)


_QR_RE = re.compile(r"^qr:\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(\d+)\s*$")
_RAT_RE = re.compile(r"^rat:\s*(-?\d+)\s*(?:/\s*(-?\d+))?\s*$")


def parse_number(text: str) -> QuadraticReal:
    """Parse ``qr:a,b,c,d`` or ``rat:p/q`` (``rat:p`` allowed)."""
    text = text.strip()
    m = _QR_RE.match(text)
    if m:
        return QuadraticReal(*(int(g) for g in m.groups()))
    m = _RAT_RE.match(text)
    if m:
        return QuadraticReal(int(m.group(1)), 0, int(m.group(2) or 1), 0)
    raise SturmrcError(
        f"cannot parse number {text!r}; expected 'qr:a,b,c,d' or 'rat:p/q'")


def floor_progression(start: Number, step: Number, count: int) -> List[int]:
    """Return ``[floor(start + k*step) for k in range(count)]``, exactly.

    This is the kernel behind mechanical words and three-gap scans.  It works
    on a common integer representation ``(A + B*k + (C + D*k)*sqrt(d)) / c``
    so each term costs one ``isqrt`` instead of building intermediate
    :class:`QuadraticReal` objects.
    """
    x0 = QuadraticReal.coerce(start)
    dx = QuadraticReal.coerce(step)
    d = x0._radicand_with(dx)
    c = x0.c * dx.c
    num, dnum = x0.a * dx.c, dx.a * x0.c
    e, de = x0.b * dx.c, dx.b * x0.c
    out = []
    append = out.append
    isqrt = math.isqrt
    for _ in range(count):
        if e == 0 or d == 0:
            append(num // c)
        elif e > 0:
            append((num + isqrt(e * e * d)) // c)
        else:
            append((num - isqrt(e * e * d) - 1) // c)
        num += dnum
        e += de
    return out
