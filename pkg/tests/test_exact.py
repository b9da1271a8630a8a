import math
from fractions import Fraction as F

import pytest

from agx.exact import ExactValue, ZERO, exact_compare, exact_min


def test_float_and_sign():
    v = ExactValue(b=F(3, 2))
    assert abs(float(v) - 3 / math.sqrt(2)) < 1e-12
    assert v.sign() == 1
    assert (-v).sign() == -1
    assert ZERO.sign() == 0


def test_sign_of_tiny_combination():
    # squeeze a rational within 1e-30 of 5*sqrt6 - 3*sqrt2 - 2*sqrt3 so the
    # sign decision needs far more precision than a float carries
    from decimal import Decimal, getcontext
    getcontext().prec = 60
    target = (5 * Decimal(6).sqrt() - 3 * Decimal(2).sqrt()
              - 2 * Decimal(3).sqrt())
    scale = 10 ** 30
    below = F(int(target * scale), scale)        # truncation: below target
    above = below + F(1, scale)
    assert (ExactValue(a=-below, b=-3, c=-2, d=5)).sign() == 1
    assert (ExactValue(a=-above, b=-3, c=-2, d=5)).sign() == -1


def test_arithmetic_and_compare():
    x = ExactValue(a=1, b=F(1, 2))
    y = ExactValue(a=F(3, 2), c=F(1, 3))
    assert exact_compare(x + y - y, x) == 0
    assert exact_compare(x, y) == (1 if float(x) > float(y) else -1)
    assert x.scale(3) == ExactValue(a=3, b=F(3, 2))
    assert exact_compare(x - x, ZERO) == 0


def test_irrational_independence():
    # equality is coefficient-wise, never through float collisions
    assert ExactValue(b=1) != ExactValue(a=F(141421356, 100000000))
    assert ExactValue(b=1, c=1) != ExactValue(d=1)


def test_exact_min():
    vals = [ExactValue(a=2), ExactValue(b=F(3, 2)), ExactValue(c=F(5, 4))]
    m = exact_min(vals)
    assert m == vals[0]


def test_json_round_trip():
    v = ExactValue(a=F(5, 4), b=F(-3, 2), c=F(7, 12), d=F(5, 6))
    blob = v.to_json()
    assert blob["float"] == pytest.approx(float(v))
    assert ExactValue.from_json(blob) == v


def test_str():
    assert str(ExactValue(a=3)) == "3"
    assert str(ZERO) == "0"
    assert "sqrt2" in str(ExactValue(a=1, b=F(3, 2)))
