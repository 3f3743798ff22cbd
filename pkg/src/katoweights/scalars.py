"""Exact scalar arithmetic: half-integers, rational rendering, symmetric functions.

Everything in this module is exact.  Floating point never appears here; the
numerical oracle converts on its side.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Union

__all__ = [
    "HalfInt",
    "Rat",
    "as_fraction",
    "parse_rational",
    "format_rational",
    "sqrt_string",
    "elementary_symmetric",
    "power_sum",
]

# Exact rationals are fractions.Fraction throughout the package.
Rat = Fraction

_HALF_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


@total_ordering
class HalfInt:
    """An exact integer or half-odd-integer, stored as twice its value.

    Weight coordinates are either all integers or all half-odd-integers, so
    keeping ``2x`` as an arbitrary-precision int makes every operation exact
    and turns the integrality classification into a parity test.
    """

    __slots__ = ("twice",)

    def __init__(self, value: Union[int, Fraction, "HalfInt", str]):
        if isinstance(value, HalfInt):
            twice = value.twice
        elif isinstance(value, int):
            twice = 2 * value
        elif isinstance(value, Fraction):
            doubled = 2 * value
            if doubled.denominator != 1:
                raise ValueError(f"{value} is not an integer or half-integer")
            twice = doubled.numerator
        elif isinstance(value, str):
            twice = _parse_half_text(value)
        else:
            raise TypeError(f"cannot build a half-integer from {value!r}")
        self.twice = twice

    @classmethod
    def from_twice(cls, twice: int) -> "HalfInt":
        out = cls.__new__(cls)
        out.twice = twice
        return out

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __bool__(self) -> bool:
        return self.twice != 0

    def __eq__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is NotImplemented:
            return NotImplemented
        return self.twice == key

    def _cmp_key(self, other):
        # Comparisons run on doubled values; int vs Fraction compares exactly.
        if isinstance(other, HalfInt):
            return other.twice
        if isinstance(other, int):
            return 2 * other
        if isinstance(other, Fraction):
            return 2 * other
        return NotImplemented

    def __lt__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is NotImplemented:
            return NotImplemented
        return self.twice < key

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt.from_twice(self.twice + other.twice)
        if isinstance(other, int):
            return HalfInt.from_twice(self.twice + 2 * other)
        if isinstance(other, Fraction):
            return self.as_fraction() + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self) -> "HalfInt":
        return HalfInt.from_twice(-self.twice)

    def __abs__(self) -> "HalfInt":
        return HalfInt.from_twice(abs(self.twice))

    def __mul__(self, other):
        if isinstance(other, int):
            return HalfInt.from_twice(self.twice * other)
        if isinstance(other, (HalfInt, Fraction)):
            return self.as_fraction() * as_fraction(other)
        return NotImplemented

    __rmul__ = __mul__

    def __float__(self) -> float:
        return self.twice / 2.0

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"


def _parse_half_text(text: str) -> int:
    m = _HALF_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse {text!r} as an integer or half-integer")
    num = int(m.group(1))
    if m.group(2) is None:
        return 2 * num
    den = int(m.group(2))
    value = Fraction(num, den)
    doubled = 2 * value
    if doubled.denominator != 1:
        raise ValueError(f"{text!r} is not an integer or half-integer")
    return doubled.numerator


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and HalfInts to an exact Fraction."""
    if isinstance(value, HalfInt):
        return value.as_fraction()
    return Fraction(value)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(q) -> str:
    """Canonical ``p/q`` (or plain ``p``) rendering, lossless round-trip."""
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def sqrt_string(q) -> str:
    """Render sqrt(q) exactly when q is a perfect rational square, else symbolically."""
    q = as_fraction(q)
    if q < 0:
        raise ValueError("negative value has no real square root")
    num_root = math.isqrt(q.numerator)
    den_root = math.isqrt(q.denominator)
    if num_root * num_root == q.numerator and den_root * den_root == q.denominator:
        return format_rational(Fraction(num_root, den_root))
    return f"sqrt({format_rational(q)})"


def elementary_symmetric(values: Iterable, ell: int) -> Fraction:
    """Elementary symmetric function sigma_ell of the given values.

    sigma_0 = 1; values of ell beyond the length give 0 (empty product
    convention, used freely by the trace identities).
    """
    if ell < 0:
        raise ValueError("order of an elementary symmetric function must be >= 0")
    vals = [as_fraction(v) for v in values]
    if ell > len(vals):
        return Fraction(0)
    coeffs = [Fraction(1)] + [Fraction(0)] * ell
    top = 0
    for v in vals:
        top = min(top + 1, ell)
        for k in range(top, 0, -1):
            coeffs[k] += coeffs[k - 1] * v
    return coeffs[ell]


def power_sum(values: Iterable, ell: int) -> Fraction:
    """Power sum of the given values; ell = 0 counts them."""
    if ell < 0:
        raise ValueError("power sums need a nonnegative exponent")
    return sum((as_fraction(v) ** ell for v in values), Fraction(0))
