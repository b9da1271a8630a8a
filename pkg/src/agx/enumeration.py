"""Isomorph-free exhaustive enumeration of chemical graphs, generation of the
extremal family by core-plus-decorations assembly, the brute-force maximum
oracle, and the catalog of the 22 exceptional extremal graphs.

The single generation engine builds all chemical graphs of order n and size m
by vertex augmentation: every graph arises from an (n-1)-vertex graph by
attaching one new vertex, and each level is deduplicated through canonical
forms.  The same engine supplies the dense degree-4 cores needed for the
extremal-family counts, because the recursion only ever materializes levels
inside the reachable (order, size) corridor.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import cache
from .agindex import ag_value
from .bounds import (EXCEPTIONAL_PAIRS, EXCEPTIONAL_VALUES,
                     canonical_quadruplet, connected_size_range)
from .canon import canonical_rows
from .errors import (BudgetExceeded, CatalogMismatch, InfeasiblePair,
                     SizeOutOfRange)
from .exact import ExactValue, exact_compare
from .graphs import ChemicalGraph, is_connected

ALL_CHEMICAL_BUDGET = 12
GNM_BUDGET = 14

_workers = max(1, int(os.environ.get("AGX_THREADS", "1")))
_PARALLEL_THRESHOLD = 400  # parents per level before a pool pays off


def set_workers(k: int) -> None:
    global _workers
    _workers = max(1, k)


@dataclass(frozen=True)
class EnumSpec:
    n: int
    m: int
    connectivity: str = "all"       # all | connected | disconnected
    target: str = "chemical"        # chemical | gnm


@dataclass(frozen=True)
class ExceptionRecord:
    pair: tuple[int, int]
    graph: ChemicalGraph
    ag: ExactValue


def _expand_chunk(args) -> set[tuple[int, ...]]:
    """Attach a new vertex of degree d to every parent in the chunk.

    With a minimum-degree floor (used when growing toward regular graphs),
    vertices still below the floor must receive the new edge, which cuts the
    attachment choices sharply."""
    n, d, parents, mindeg = args
    out: set[tuple[int, ...]] = set()
    newbit = 1 << (n - 1)
    for rows in parents:
        degs = [rows[v].bit_count() for v in range(n - 1)]
        required = [v for v in range(n - 1) if degs[v] < mindeg]
        if len(required) > d:
            continue
        optional = [v for v in range(n - 1)
                    if mindeg <= degs[v] < 4]
        if len(required) + len(optional) < d:
            continue
        for extra in itertools.combinations(optional, d - len(required)):
            child = list(rows)
            child.append(0)
            for v in itertools.chain(required, extra):
                child[v] |= newbit
                child[n - 1] |= 1 << v
            out.add(canonical_rows(n, tuple(child)))
    return out


_levels: dict[tuple[int, int, int], tuple[tuple[int, ...], ...]] = {}


def _expand_level(n: int, m: int, reg_target: int,
                  parent_fn) -> tuple[tuple[int, ...], ...]:
    # child vertices may lack at most reg_target - n edges (0 = no target)
    mindeg = max(0, 4 - (reg_target - n)) if reg_target else 0
    found: set[tuple[int, ...]] = set()
    for d in range(max(0, mindeg), min(4, m, n - 1) + 1):
        parents = parent_fn(n - 1, m - d)
        if not parents:
            continue
        if _workers > 1 and len(parents) >= _PARALLEL_THRESHOLD:
            # strided slices: expansion cost varies a lot across the sorted
            # parent list, contiguous blocks would starve most workers
            k = min(_workers * 8, len(parents))
            tasks = [(n, d, parents[i::k], mindeg) for i in range(k)]
            with ProcessPoolExecutor(max_workers=_workers) as pool:
                for part in pool.map(_expand_chunk, tasks):
                    found |= part
        else:
            found |= _expand_chunk((n, d, parents, mindeg))
    return tuple(sorted(found))


def chem_level(n: int, m: int) -> tuple[tuple[int, ...], ...]:
    """Canonical forms of all chemical graphs of order n and size m."""
    if n < 1 or m < 0 or m > 2 * n or m > n * (n - 1) // 2:
        return ()
    if n == 1:
        return ((0,),) if m == 0 else ()
    key = (n, m, 0)
    hit = _levels.get(key)
    if hit is None:
        hit = _levels[key] = _expand_level(n, m, 0, chem_level)
    return hit


def regular_level(n: int, m: int, target: int) -> tuple[tuple[int, ...], ...]:
    """Canonical forms of the (n, m) graphs extendable to a 4-regular graph
    on `target` vertices: the last target - n augmentations can raise each
    degree by at most one, so every vertex needs degree >= 4 - (target - n)
    and the total deficiency 4n - 2m can be at most 4 (target - n)."""
    slack = target - n
    if n < 1 or slack < 0 or m < 0 or m > n * (n - 1) // 2:
        return ()
    if 4 * n - 2 * m > 4 * slack or 2 * m > 4 * n:
        return ()
    if n == 1:
        return ((0,),) if m == 0 else ()
    key = (n, m, target)
    hit = _levels.get(key)
    if hit is None:
        parent = lambda pn, pm: regular_level(pn, pm, target)
        hit = _levels[key] = _expand_level(n, m, target, parent)
    return hit


def _filter_connectivity(graphs, connectivity: str):
    if connectivity == "all":
        return list(graphs)
    want = connectivity == "connected"
    return [g for g in graphs if is_connected(g) == want]


def enumerate_chemical(spec: EnumSpec, *, override_budget: bool = False,
                       use_cache: bool = True) -> list[ChemicalGraph]:
    """One canonical representative per isomorphism class, sorted."""
    if spec.target == "gnm":
        return enumerate_Gnm(spec.n, spec.m, spec.connectivity,
                             override_budget=override_budget)
    if spec.n > ALL_CHEMICAL_BUDGET and not override_budget:
        raise BudgetExceeded(
            f"all-chemical enumeration capped at n={ALL_CHEMICAL_BUDGET}")
    graphs = _cached_level(spec.n, spec.m, use_cache)
    return _filter_connectivity(graphs, spec.connectivity)


def _cached_level(n: int, m: int, use_cache: bool) -> list[ChemicalGraph]:
    from . import graph6
    if use_cache:
        lines = cache.load("all", n, m)
        if lines is not None:
            return [graph6.decode(s) for s in lines]
    graphs = [ChemicalGraph(n, rows) for rows in chem_level(n, m)]
    if use_cache:
        cache.store("all", n, m, [graph6.encode(g) for g in graphs])
    return graphs


def enumerate_Gnm(n: int, m: int, connectivity: str = "all", *,
                  override_budget: bool = False) -> list[ChemicalGraph]:
    """All members of the extremal family for (n,m), up to isomorphism.

    Members decompose as a degree-4 core, at most one extra vertex of degree
    2 or 3 wired into the core, and pendants that top every core vertex up to
    degree 4; enumerating cores and decorations covers the family at orders
    where full enumeration is out of reach."""
    if n > GNM_BUDGET and not override_budget:
        raise BudgetExceeded(f"extremal-family enumeration capped at n={GNM_BUDGET}")
    q = canonical_quadruplet(n, m)
    if q is None:
        raise InfeasiblePair(f"no canonical quadruplet for ({n},{m})")
    t1, t2, t3, t4 = q
    x44 = m - t1 - 2 * t2 - 3 * t3
    if t4 == 0 or x44 < 0:
        return []
    s_deg = 2 * t2 + 3 * t3
    if t1 == 0 and s_deg == 0:
        # no pendants and no degree-2/3 vertex: members are exactly the
        # 4-regular graphs, which the pruned generator reaches much faster
        graphs = [ChemicalGraph(n, rows) for rows in regular_level(n, m, n)]
        return _filter_connectivity(graphs, connectivity)
    found: set[tuple[int, ...]] = set()
    for core_rows in chem_level(t4, x44):
        core_degs = [r.bit_count() for r in core_rows]
        if s_deg:
            slots = [v for v in range(t4) if core_degs[v] <= 3]
            attachments = itertools.combinations(slots, s_deg)
        else:
            attachments = [()]
        for S in attachments:
            rows = list(core_rows)
            degs = list(core_degs)
            idx = t4
            if s_deg:
                rows.append(0)
                for v in S:
                    rows[v] |= 1 << idx
                    rows[idx] |= 1 << v
                    degs[v] += 1
                idx += 1
            for v in range(t4):
                for _ in range(4 - degs[v]):
                    rows.append(1 << v)
                    rows[v] |= 1 << idx
                    idx += 1
            if idx != n:
                continue  # pendant budget mismatch; not a member
            found.add(canonical_rows(n, tuple(rows)))
    graphs = [ChemicalGraph(n, rows) for rows in sorted(found)]
    return _filter_connectivity(graphs, connectivity)


def brute_force_max(n: int, m: int, *, override_budget: bool = False
                    ) -> tuple[ExactValue, list[ChemicalGraph]]:
    """Exact maximum AG over ALL chemical graphs of order n and size m,
    with the complete list of maximizers."""
    graphs = enumerate_chemical(EnumSpec(n, m), override_budget=override_budget)
    best: ExactValue | None = None
    witnesses: list[ChemicalGraph] = []
    for g in graphs:
        val = ag_value(g)
        if best is None:
            best, witnesses = val, [g]
            continue
        c = exact_compare(val, best)
        if c > 0:
            best, witnesses = val, [g]
        elif c == 0:
            witnesses.append(g)
    if best is None:
        raise InfeasiblePair(f"no chemical graph with (n,m)=({n},{m})")
    return best, witnesses


def derive_exception_catalog(*, use_cache: bool = True
                             ) -> dict[tuple[int, int], ExceptionRecord]:
    """Recompute the 22 exceptional graphs from the oracle and cross-check
    each AG value against its hard-coded closed form."""
    from . import graph6
    out: dict[tuple[int, int], ExceptionRecord] = {}
    for (n, m), expected in sorted(EXCEPTIONAL_VALUES.items()):
        g = None
        if use_cache:
            lines = cache.load("catalog", n, m)
            if lines is not None and len(lines) == 1:
                g = graph6.decode(lines[0])
                if exact_compare(ag_value(g), expected) != 0:
                    g = None
        if g is None:
            best, witnesses = brute_force_max(n, m)
            if len(witnesses) != 1:
                raise CatalogMismatch(
                    f"({n},{m}): expected a unique maximizer, found {len(witnesses)}")
            if exact_compare(best, expected) != 0:
                raise CatalogMismatch(
                    f"({n},{m}): oracle max {float(best):.6f} != closed form "
                    f"{float(expected):.6f}")
            g = witnesses[0]
            if use_cache:
                cache.store("catalog", n, m, [graph6.encode(g)])
        out[(n, m)] = ExceptionRecord((n, m), g, expected)
    return out


def extremal_counts(n: int, m: int, *, override_budget: bool = False
                    ) -> tuple[int, int]:
    """(connected, non-connected) counts of extremal chemical graphs."""
    lo, hi = connected_size_range(n)
    if not (lo <= m <= hi):
        raise SizeOutOfRange(f"size {m} outside connected range [{lo},{hi}] for n={n}")
    if (n, m) in EXCEPTIONAL_PAIRS:
        return (1, 0)
    members = enumerate_Gnm(n, m, override_budget=override_budget)
    connected = sum(1 for g in members if is_connected(g))
    return connected, len(members) - connected


def clear_memo() -> None:
    _levels.clear()
