"""Exact values in the rational vector space spanned by {1, sqrt2, sqrt3, sqrt6}.

Every edge cost of a chemical graph lies in this 4-dimensional space, so sums
of costs, bounds and their differences can be compared without floating-point
error.  A value is a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) with rational a,b,c,d
and it is zero iff all four coefficients are zero (the basis is linearly
independent over the rationals).
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import isqrt
from typing import Union

Rat = Union[int, Fraction]

_SQRT_FLOAT = {1: 1.0, 2: math.sqrt(2), 3: math.sqrt(3), 6: math.sqrt(6)}


def _sqrt_interval(k: int, digits: int) -> tuple[Fraction, Fraction]:
    """Rational lower/upper bounds of sqrt(k) with `digits` decimal digits."""
    scale = 10 ** digits
    lo = isqrt(k * scale * scale)
    return Fraction(lo, scale), Fraction(lo + 1, scale)


class ExactValue:
    """Immutable element a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational coefficients."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: Rat = 0, b: Rat = 0, c: Rat = 0, d: Rat = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __setattr__(self, name, value):
        raise AttributeError("ExactValue is immutable")

    # -- arithmetic (vector-space operations only) --

    def __add__(self, other: "ExactValue") -> "ExactValue":
        return ExactValue(self.a + other.a, self.b + other.b,
                          self.c + other.c, self.d + other.d)

    def __sub__(self, other: "ExactValue") -> "ExactValue":
        return ExactValue(self.a - other.a, self.b - other.b,
                          self.c - other.c, self.d - other.d)

    def __neg__(self) -> "ExactValue":
        return ExactValue(-self.a, -self.b, -self.c, -self.d)

    def scale(self, r: Rat) -> "ExactValue":
        r = Fraction(r)
        return ExactValue(self.a * r, self.b * r, self.c * r, self.d * r)

    def __mul__(self, r: Rat) -> "ExactValue":
        if isinstance(r, ExactValue):
            return NotImplemented
        return self.scale(r)

    __rmul__ = __mul__

    # -- comparisons --

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def sign(self) -> int:
        """Sign of the value, certified by refining rational sqrt intervals."""
        if self.is_zero():
            return 0
        digits = 15
        while True:
            lo = self.a
            hi = self.a
            for coeff, k in ((self.b, 2), (self.c, 3), (self.d, 6)):
                if coeff == 0:
                    continue
                slo, shi = _sqrt_interval(k, digits)
                if coeff > 0:
                    lo += coeff * slo
                    hi += coeff * shi
                else:
                    lo += coeff * shi
                    hi += coeff * slo
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            digits *= 2

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactValue):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __lt__(self, other: "ExactValue") -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: "ExactValue") -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: "ExactValue") -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: "ExactValue") -> bool:
        return (self - other).sign() >= 0

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    # -- conversions --

    def __float__(self) -> float:
        return (float(self.a) + float(self.b) * _SQRT_FLOAT[2]
                + float(self.c) * _SQRT_FLOAT[3] + float(self.d) * _SQRT_FLOAT[6])

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def to_json(self) -> dict:
        return {
            "a": [self.a.numerator, self.a.denominator],
            "b": [self.b.numerator, self.b.denominator],
            "c": [self.c.numerator, self.c.denominator],
            "d": [self.d.numerator, self.d.denominator],
            "float": float(self),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ExactValue":
        return cls(Fraction(*obj["a"]), Fraction(*obj["b"]),
                   Fraction(*obj["c"]), Fraction(*obj["d"]))

    def __repr__(self):
        return f"ExactValue({self})"

    def __str__(self):
        parts = []
        for coeff, name in ((self.a, ""), (self.b, "sqrt2"),
                            (self.c, "sqrt3"), (self.d, "sqrt6")):
            if coeff == 0:
                continue
            if not name:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(name)
            else:
                parts.append(f"{coeff}*{name}")
        return " + ".join(parts) if parts else "0"


ZERO = ExactValue()


def exact_compare(a: ExactValue, b: ExactValue) -> int:
    """-1, 0 or 1 as a < b, a == b, a > b; ties decided coefficient-wise."""
    diff = a - b
    if diff.is_zero():
        return 0
    return diff.sign()


def exact_min(values) -> ExactValue:
    values = list(values)
    best = values[0]
    for v in values[1:]:
        if exact_compare(v, best) < 0:
            best = v
    return best
