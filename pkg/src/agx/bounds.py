"""The canonical degree quadruplet, the sharp upper bound UB(n,m), and the
closed-form AG values of the 22 exceptional (n,m) pairs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .agindex import f_value
from .errors import InfeasiblePair, SizeOutOfRange
from .exact import ExactValue

Quadruplet = tuple[int, int, int, int]


def canonical_quadruplet(n: int, m: int) -> Quadruplet | None:
    """The unique (t1,t2,t3,t4) with sum n, weighted sum 2m and t2+t3 <= 1,
    or None when no such quadruplet exists."""
    r = (2 * m - n) % 3
    t1 = (4 * n - 2 * m) // 3  # floor
    t4 = (2 * m - n) // 3      # floor
    t2 = 1 if r == 1 else 0
    t3 = 1 if r == 2 else 0
    q = (t1, t2, t3, t4)
    if any(t < 0 for t in q):
        return None
    if t1 + t2 + t3 + t4 != n or t1 + 2 * t2 + 3 * t3 + 4 * t4 != 2 * m:
        return None
    return q


_RESIDUE_TERMS = (
    ExactValue(),
    ExactValue(a=Fraction(-13, 6), b=Fraction(3, 2)),   # 3/sqrt2 - 13/6
    ExactValue(a=Fraction(-37, 12), c=Fraction(7, 4)),  # 21/(4*sqrt3) - 37/12
)


def _ub_formula(n: int, m: int) -> ExactValue:
    base = ExactValue(a=Fraction(2 * n + 5 * m, 6))
    return base + _RESIDUE_TERMS[(2 * m - n) % 3]


def upper_bound(n: int, m: int) -> ExactValue:
    """UB(n,m): the closed-form bound, equal to f at the canonical quadruplet."""
    if canonical_quadruplet(n, m) is None:
        raise InfeasiblePair(f"no canonical quadruplet for (n,m)=({n},{m})")
    return _ub_formula(n, m)


# Closed-form AG(H_{n,m}) for the 22 uniquely-extremal exceptional pairs,
# as coefficients (a, b, c, d) on {1, sqrt2, sqrt3, sqrt6}.
EXCEPTIONAL_VALUES: dict[tuple[int, int], ExactValue] = {
    (1, 0): ExactValue(),
    (2, 1): ExactValue(a=1),
    (3, 2): ExactValue(b=Fraction(3, 2)),
    (3, 3): ExactValue(a=3),
    (4, 3): ExactValue(c=2),
    (4, 4): ExactValue(a=1, c=Fraction(2, 3), d=Fraction(5, 6)),
    (4, 5): ExactValue(a=1, d=Fraction(5, 3)),
    (4, 6): ExactValue(a=6),
    (5, 5): ExactValue(a=Fraction(7, 2), b=Fraction(3, 2)),
    (5, 6): ExactValue(a=Fraction(5, 4), b=Fraction(3, 2),
                       c=Fraction(7, 12), d=Fraction(5, 6)),
    (5, 7): ExactValue(a=1, b=Fraction(9, 2)),
    (5, 8): ExactValue(a=2, b=Fraction(3, 2), c=Fraction(7, 3)),
    (5, 9): ExactValue(a=3, c=Fraction(7, 2)),
    (6, 5): ExactValue(a=Fraction(15, 4), b=Fraction(3, 2)),
    (6, 6): ExactValue(a=Fraction(5, 2), b=Fraction(3, 4),
                       c=Fraction(5, 4), d=Fraction(5, 12)),
    (6, 7): ExactValue(a=Fraction(7, 2), b=3),
    (6, 8): ExactValue(a=Fraction(9, 2), c=Fraction(7, 3)),
    (6, 9): ExactValue(a=Fraction(17, 4), b=Fraction(3, 2), c=Fraction(7, 4)),
    (7, 6): ExactValue(a=Fraction(15, 4), c=Fraction(23, 12)),
    (7, 8): ExactValue(a=Fraction(5, 2), b=Fraction(9, 2)),
    (8, 8): ExactValue(a=5, b=3),
    (10, 9): ExactValue(a=Fraction(15, 2), c=Fraction(11, 6)),
}

EXCEPTIONAL_PAIRS = frozenset(EXCEPTIONAL_VALUES)


def connected_size_range(n: int) -> tuple[int, int]:
    return n - 1, min(2 * n, n * (n - 1) // 2)


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    ub: ExactValue
    residue: int
    exceptional: bool
    sharp: ExactValue

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "ub": self.ub.to_json(),
            "residue": self.residue,
            "exceptional": self.exceptional,
            "sharp": self.sharp.to_json(),
        }


def sharp_bound(n: int, m: int) -> BoundReport:
    """Sharp maximum AG over connected chemical graphs of order n, size m."""
    lo, hi = connected_size_range(n)
    if not (lo <= m <= hi):
        raise SizeOutOfRange(f"size {m} outside connected range [{lo},{hi}] for n={n}")
    ub = _ub_formula(n, m)
    exceptional = (n, m) in EXCEPTIONAL_VALUES
    sharp = EXCEPTIONAL_VALUES[(n, m)] if exceptional else ub
    return BoundReport(n, m, ub, (2 * m - n) % 3, exceptional, sharp)


def _check_ub_identity():
    # internal sanity: UB formula agrees with f at the canonical quadruplet
    for n in range(2, 30):
        for m in range(n - 1, min(2 * n, n * (n - 1) // 2) + 1):
            q = canonical_quadruplet(n, m)
            if q is not None:
                assert _ub_formula(n, m) == f_value(q)
