import pytest

from agx.agindex import ag_value
from agx.bounds import EXCEPTIONAL_VALUES, upper_bound
from agx.canon import canonical_key
from agx.enumeration import (EnumSpec, brute_force_max, clear_memo,
                             derive_exception_catalog, enumerate_Gnm,
                             enumerate_chemical, extremal_counts, set_workers)
from agx.errors import BudgetExceeded
from agx.exact import exact_compare
from agx.graphs import build_graph, is_connected


def _keys(graphs):
    return {canonical_key(g) for g in graphs}


def test_tiny_levels():
    assert len(enumerate_chemical(EnumSpec(1, 0))) == 1
    assert len(enumerate_chemical(EnumSpec(2, 1))) == 1
    assert len(enumerate_chemical(EnumSpec(3, 2))) == 1


def test_4_3_classes():
    got = _keys(enumerate_chemical(EnumSpec(4, 3)))
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    tri_plus_iso = build_graph(4, [(0, 1), (1, 2), (0, 2)])
    assert got == _keys([p4, star, tri_plus_iso])


def test_connectivity_filters():
    all_graphs = enumerate_chemical(EnumSpec(5, 5))
    conn = enumerate_chemical(EnumSpec(5, 5, "connected"))
    disc = enumerate_chemical(EnumSpec(5, 5, "disconnected"))
    assert len(all_graphs) == 6
    assert len(conn) + len(disc) == 6
    assert all(is_connected(g) for g in conn)
    assert not any(is_connected(g) for g in disc)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_chemical(EnumSpec(13, 12))
    with pytest.raises(BudgetExceeded):
        enumerate_Gnm(15, 14)


def test_brute_force_max():
    best, wits = brute_force_max(2, 1)
    assert float(best) == 1.0 and len(wits) == 1
    best, wits = brute_force_max(5, 4)
    assert len(wits) == 1
    assert canonical_key(wits[0]) == canonical_key(
        build_graph(5, [(0, i) for i in range(1, 5)]))
    best, wits = brute_force_max(5, 7)
    assert exact_compare(best, EXCEPTIONAL_VALUES[(5, 7)]) == 0
    assert len(wits) == 1


def test_enumerate_Gnm_agrees_with_brute_force():
    # non-exceptional pairs only; at exceptional pairs the family does not
    # attain the maximum
    for n, m in [(5, 4), (6, 10), (6, 11), (7, 7), (7, 10), (8, 9)]:
        best, wits = brute_force_max(n, m)
        members = enumerate_Gnm(n, m)
        assert _keys(wits) == _keys(members), (n, m)
        assert exact_compare(best, upper_bound(n, m)) == 0


def test_extremal_counts():
    assert extremal_counts(5, 4) == (1, 0)
    assert extremal_counts(12, 11) == (1, 1)
    assert extremal_counts(10, 10) == (2, 0)
    assert extremal_counts(10, 9) == (1, 0)  # exceptional pair
    d = enumerate_Gnm(12, 11, "disconnected")
    assert len(d) == 1 and not is_connected(d[0])


def test_catalog():
    records = derive_exception_catalog(use_cache=False)
    assert len(records) == 22
    for (n, m), rec in records.items():
        assert rec.graph.n == n and rec.graph.m == m
        assert exact_compare(ag_value(rec.graph), EXCEPTIONAL_VALUES[(n, m)]) == 0


def test_worker_determinism():
    clear_memo()
    set_workers(2)
    try:
        two = _keys(enumerate_chemical(EnumSpec(7, 8), use_cache=False))
    finally:
        set_workers(1)
        clear_memo()
    one = _keys(enumerate_chemical(EnumSpec(7, 8), use_cache=False))
    assert one == two
    assert len(one) == 82


def test_cache_round_trip(tmp_path, monkeypatch):
    from agx import cache
    monkeypatch.setenv("AGX_CACHE", str(tmp_path))
    cache.set_cache_dir(str(tmp_path))
    clear_memo()
    first = _keys(enumerate_chemical(EnumSpec(6, 6)))
    clear_memo()
    second = _keys(enumerate_chemical(EnumSpec(6, 6)))
    assert first == second and len(first) == 20
    assert any(p.suffix == ".g6" for p in tmp_path.iterdir())
