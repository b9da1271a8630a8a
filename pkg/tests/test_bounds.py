import pytest

from agx.agindex import f_value
from agx.bounds import (EXCEPTIONAL_PAIRS, EXCEPTIONAL_VALUES,
                        canonical_quadruplet, connected_size_range,
                        sharp_bound, upper_bound)
from agx.errors import InfeasiblePair, SizeOutOfRange
from agx.exact import exact_compare
from agx.verify import EXCEPTIONAL_DIFFS, matches_printed


def test_canonical_quadruplet_examples():
    assert canonical_quadruplet(17, 17) == (11, 0, 1, 5)
    assert canonical_quadruplet(5, 4) == (4, 0, 0, 1)
    assert canonical_quadruplet(12, 11) == (8, 1, 0, 3)
    assert canonical_quadruplet(1, 0) is None
    assert canonical_quadruplet(2, 1) == (2, 0, 0, 0)  # K2's own census
    assert canonical_quadruplet(7, 3) is None  # 2m < n
    assert canonical_quadruplet(4, 6) == (1, 0, 1, 2)
    assert canonical_quadruplet(5, 10) == (0, 0, 0, 5)  # K5


def test_quadruplet_uniqueness_sweep():
    # the returned quadruplet is the only nonnegative integer solution with
    # t2 + t3 <= 1; check by exhaustion for all n <= 30
    for n in range(1, 31):
        lo, hi = connected_size_range(n)
        for m in range(lo, hi + 1):
            solutions = []
            for t2 in (0, 1):
                for t3 in ((0, 1) if t2 == 0 else (0,)):
                    # t1 + t4 = n - t2 - t3, t1 + 4 t4 = 2m - 2 t2 - 3 t3
                    s = n - t2 - t3
                    w = 2 * m - 2 * t2 - 3 * t3
                    if (w - s) % 3 == 0:
                        t4 = (w - s) // 3
                        t1 = s - t4
                        if t1 >= 0 and t4 >= 0:
                            solutions.append((t1, t2, t3, t4))
            q = canonical_quadruplet(n, m)
            if q is None:
                assert not solutions
            else:
                assert solutions == [q]


def test_upper_bound_equals_f_at_quadruplet():
    for n in range(2, 31):
        lo, hi = connected_size_range(n)
        for m in range(lo, hi + 1):
            q = canonical_quadruplet(n, m)
            if q is None:
                continue
            assert upper_bound(n, m) == f_value(q)


def test_upper_bound_infeasible():
    with pytest.raises(InfeasiblePair):
        upper_bound(1, 0)
    with pytest.raises(InfeasiblePair):
        upper_bound(9, 4)


def test_sharp_bound_examples():
    rep = sharp_bound(10, 9)
    assert rep.exceptional
    assert abs(float(rep.ub) - 10.7811) < 5e-5
    assert abs(float(rep.sharp) - 10.6754) < 5e-5

    rep = sharp_bound(12, 11)
    assert not rep.exceptional
    assert abs(float(rep.sharp) - 13.1213) < 5e-5  # 11 + (3/2) sqrt2

    rep = sharp_bound(4, 5)
    assert rep.exceptional
    assert abs(float(rep.ub) - float(rep.sharp) - 0.4175) < 5e-5


def test_sharp_bound_range_checks():
    with pytest.raises(SizeOutOfRange):
        sharp_bound(5, 3)
    with pytest.raises(SizeOutOfRange):
        sharp_bound(5, 11)
    with pytest.raises(SizeOutOfRange):
        sharp_bound(4, 7)
    # m = 2n allowed only when the clique bound permits
    sharp_bound(10, 20)


def test_exceptional_gaps():
    assert len(EXCEPTIONAL_VALUES) == 22
    gaps = {}
    for (n, m) in EXCEPTIONAL_PAIRS:
        diff = sharp_bound(n, m).ub - EXCEPTIONAL_VALUES[(n, m)]
        assert diff.sign() == 1
        assert matches_printed(float(diff), EXCEPTIONAL_DIFFS[(n, m)])
        gaps[(n, m)] = diff
    top = max(gaps.values(), key=float)
    assert float(top) == pytest.approx(0.5)
    assert min(float(v) for v in gaps.values()) == pytest.approx(0.03845, abs=5e-5)


def test_connected_size_range():
    assert connected_size_range(4) == (3, 6)
    assert connected_size_range(5) == (4, 10)
    assert connected_size_range(10) == (9, 20)
    assert connected_size_range(30) == (29, 60)
