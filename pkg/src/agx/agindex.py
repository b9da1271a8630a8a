"""Edge costs, exact AG values, and the linear degree-census functional.

The cost of an edge with endpoint degrees i, j is (i+j)/(2*sqrt(ij)); for
chemical graphs every such cost lies in the span of {1, sqrt2, sqrt3, sqrt6},
so whole-graph values are computed exactly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegreeOutOfRange
from .exact import ExactValue
from .graphs import ChemicalGraph, census

# squarefree decomposition i*j = s^2 * r with r in {1, 2, 3, 6}
_SQUAREFREE = {1: (1, 1), 2: (1, 2), 3: (1, 3), 4: (2, 1), 6: (1, 6),
               8: (2, 2), 9: (3, 1), 12: (2, 3), 16: (4, 1)}


def edge_cost(i: int, j: int) -> ExactValue:
    """Exact cost (i+j)/(2*sqrt(ij)) of an edge with endpoint degrees i, j."""
    if not (1 <= i <= 4 and 1 <= j <= 4):
        raise DegreeOutOfRange(f"degrees ({i},{j}) outside 1..4")
    s, r = _SQUAREFREE[i * j]
    coeff = Fraction(i + j, 2 * s * r)
    if r == 1:
        return ExactValue(a=coeff)
    if r == 2:
        return ExactValue(b=coeff)
    if r == 3:
        return ExactValue(c=coeff)
    return ExactValue(d=coeff)


def ag_value(g: ChemicalGraph) -> ExactValue:
    """Sum of edge costs over the whole graph; 0 for an empty edge set."""
    total = ExactValue()
    for (i, j), count in census(g).edge_counts.items():
        if count:
            total = total + edge_cost(i, j).scale(count)
    return total


# f(t1,t2,t3,t4) = (3/4)t1 + (3/sqrt2 - 1)t2 + (21/(4*sqrt3) - 3/2)t3 + 2t4
_F_COEFFS = (
    ExactValue(a=Fraction(3, 4)),
    ExactValue(a=-1, b=Fraction(3, 2)),
    ExactValue(a=Fraction(-3, 2), c=Fraction(7, 4)),
    ExactValue(a=2),
)


def f_value(quadruplet: tuple[int, int, int, int]) -> ExactValue:
    """The linear functional giving AG(G) from the degree census of graphs
    whose edges all touch a degree-4 vertex."""
    total = ExactValue()
    for coeff, t in zip(_F_COEFFS, quadruplet):
        if t:
            total = total + coeff.scale(t)
    return total
