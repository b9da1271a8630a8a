import pytest

from agx.agindex import ag_value
from agx.bounds import (EXCEPTIONAL_PAIRS, canonical_quadruplet,
                        connected_size_range, upper_bound)
from agx.constructor import (construct_extremal, construct_with_plan,
                             feasibility_ok, is_member_Gnm)
from agx.errors import ExceptionalPair, SizeOutOfRange
from agx.exact import ExactValue, exact_compare
from agx.graphs import build_graph, census, is_connected


def test_star_case():
    g = construct_extremal(5, 4)
    assert sorted(g.edges()) == [(0, 1), (0, 2), (0, 3), (0, 4)]
    assert ag_value(g) == ExactValue(a=5)


def test_exceptional_pairs_rejected():
    with pytest.raises(ExceptionalPair):
        construct_extremal(3, 3)
    with pytest.raises(ExceptionalPair):
        construct_extremal(10, 9)


def test_out_of_range_rejected():
    with pytest.raises(SizeOutOfRange):
        construct_extremal(6, 4)
    with pytest.raises(SizeOutOfRange):
        construct_extremal(6, 13)


def test_17_17():
    g, plan = construct_with_plan(17, 17)
    assert census(g).quadruplet == (11, 0, 1, 5)
    assert exact_compare(ag_value(g), upper_bound(17, 17)) == 0
    assert is_connected(g) and is_member_Gnm(g)
    # the step-4 edges together with the special wiring span special + core
    tree_edges = plan.steps.get(3, []) + plan.steps.get(4, [])
    verts = set()
    for u, v in tree_edges:
        verts.update((u, v))
    assert verts == set(range(6))  # 5 core vertices plus the special one
    assert len(tree_edges) == len(verts) - 1


def test_feasibility_holds_everywhere_in_range():
    for n in range(14, 201):
        lo, hi = connected_size_range(n)
        for m in range(lo, hi + 1):
            q = canonical_quadruplet(n, m)
            if q is None:
                continue
            assert feasibility_ok(q, m), (n, m)


def test_contract_sweep():
    for n in range(2, 41):
        lo, hi = connected_size_range(n)
        for m in range(lo, hi + 1):
            if (n, m) in EXCEPTIONAL_PAIRS:
                continue
            g = construct_extremal(n, m)
            assert g.n == n and g.m == m
            assert is_connected(g)
            assert is_member_Gnm(g)
            assert census(g).quadruplet == canonical_quadruplet(n, m)
            assert exact_compare(ag_value(g), upper_bound(n, m)) == 0


def test_deterministic():
    a = construct_extremal(23, 31)
    b = construct_extremal(23, 31)
    assert a == b


def test_is_member_Gnm():
    star = build_graph(5, [(0, i) for i in range(1, 5)])
    assert is_member_Gnm(star)
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert not is_member_Gnm(p3)  # middle vertex has degree 2, no deg-4 end
    g = build_graph(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])
    assert is_member_Gnm(g)
    dangling = build_graph(6, [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)])
    assert not is_member_Gnm(dangling)  # edge (4,5) misses the degree-4 core
    with_isolated = build_graph(6, [(0, 1), (0, 2), (0, 3), (0, 4)])
    assert not is_member_Gnm(with_isolated)
