import math
from fractions import Fraction as F

import pytest

from agx.agindex import ag_value, edge_cost, f_value
from agx.errors import DegreeOutOfRange
from agx.exact import ExactValue, exact_compare
from agx.graphs import build_graph

# 4-decimal reference cost matrix c_{i,j} = (i+j)/(2 sqrt(i j))
COSTS = {
    (1, 1): 1.0000, (1, 2): 1.0607, (1, 3): 1.1547, (1, 4): 1.2500,
    (2, 2): 1.0000, (2, 3): 1.0206, (2, 4): 1.0607,
    (3, 3): 1.0000, (3, 4): 1.0104,
    (4, 4): 1.0000,
}


def test_edge_costs_match_reference():
    for (i, j), ref in COSTS.items():
        c = edge_cost(i, j)
        assert abs(float(c) - (i + j) / (2 * math.sqrt(i * j))) < 1e-12
        assert abs(float(c) - ref) < 5e-5
        assert edge_cost(j, i) == c


def test_edge_cost_is_exact_not_float():
    c = edge_cost(2, 3)  # 5 / (2 sqrt6)
    assert c == ExactValue(d=F(5, 12))
    with pytest.raises(DegreeOutOfRange):
        edge_cost(0, 3)
    with pytest.raises(DegreeOutOfRange):
        edge_cost(1, 5)


def test_ag_small_graphs():
    k2 = build_graph(2, [(0, 1)])
    assert ag_value(k2) == ExactValue(a=1)
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert ag_value(p3) == ExactValue(b=F(3, 2))
    k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert ag_value(k4) == ExactValue(a=6)
    star = build_graph(5, [(0, i) for i in range(1, 5)])
    assert ag_value(star) == ExactValue(a=5)


def test_ag_lower_bounded_by_size():
    # AM-GM: every edge contributes at least 1
    g = build_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)])
    assert exact_compare(ag_value(g), ExactValue(a=g.m)) >= 0


def test_f_value_on_canonical_quadruplets():
    # K_{1,4} has quadruplet (4,0,0,1) and AG 5
    assert f_value((4, 0, 0, 1)) == ExactValue(a=5)
    # (11,0,1,5) is the quadruplet for (n,m)=(17,17)
    v = f_value((11, 0, 1, 5))
    assert abs(float(v) - 19.7811) < 5e-5


def test_f_matches_ag_on_family_member():
    # a graph whose every edge touches a degree-4 vertex
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    g = build_graph(5, edges)
    from agx.graphs import census
    q = census(g).quadruplet
    assert ag_value(g) == f_value(q)
