"""Deterministic construction of a connected extremal graph for valid
non-exceptional (n,m), following the six-step recipe: place the degree
classes, wire the optional degree-2/3 vertex into the degree-4 core, span the
core with a tree, complete the core edge count, then attach pendants until
every core vertex reaches degree 4."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bounds import (EXCEPTIONAL_PAIRS, canonical_quadruplet,
                     connected_size_range)
from .errors import ExceptionalPair, Infeasible, SizeOutOfRange
from .graphs import ChemicalGraph, build_graph, census


@dataclass
class ConstructionPlan:
    n: int
    m: int
    quadruplet: tuple[int, int, int, int]
    core: list[int]              # vertices targeted at degree 4
    special: int | None          # the single degree-2 or degree-3 vertex
    pendants: list[int]          # vertices targeted at degree 1
    steps: dict[int, list[tuple[int, int]]] = field(default_factory=dict)

    def all_edges(self) -> list[tuple[int, int]]:
        out = []
        for step in sorted(self.steps):
            out.extend(self.steps[step])
        return out

    def to_json(self) -> dict:
        return {
            "quadruplet": list(self.quadruplet),
            "core": self.core,
            "special": self.special,
            "pendants": self.pendants,
            "steps": {str(k): [list(e) for e in v] for k, v in self.steps.items()},
        }


def feasibility_ok(quadruplet: tuple[int, int, int, int], m: int) -> bool:
    """The four inequalities that make the six steps executable."""
    t1, t2, t3, t4 = quadruplet
    x44 = m - t1 - 2 * t2 - 3 * t3
    return (2 * t2 <= t4
            and 3 * t3 <= t4
            and x44 <= t4 * (t4 - 1) // 2
            and t1 <= 4 * t4)


def _complete_core(t4: int, degrees: list[int], present: set[tuple[int, int]],
                   need: int) -> list[tuple[int, int]]:
    """Pick `need` extra core edges, lex-greedy with backtracking.

    Greedy over the lexicographically smallest eligible pair; if a choice
    strands capacity the search backtracks, so any completion guaranteed to
    exist is found."""
    pairs = [(u, v) for u in range(t4) for v in range(u + 1, t4)
             if (u, v) not in present]
    chosen: list[tuple[int, int]] = []

    def dfs(idx: int, need: int) -> bool:
        if need == 0:
            return True
        if len(pairs) - idx < need:
            return False
        u, v = pairs[idx]
        if degrees[u] < 4 and degrees[v] < 4:
            degrees[u] += 1
            degrees[v] += 1
            chosen.append((u, v))
            if dfs(idx + 1, need - 1):
                return True
            chosen.pop()
            degrees[u] -= 1
            degrees[v] -= 1
        return dfs(idx + 1, need)

    if not dfs(0, need):
        raise Infeasible("core completion impossible")
    return chosen


def construct_with_plan(n: int, m: int) -> tuple[ChemicalGraph, ConstructionPlan]:
    lo, hi = connected_size_range(n)
    if not (lo <= m <= hi):
        raise SizeOutOfRange(f"size {m} outside connected range [{lo},{hi}] for n={n}")
    if (n, m) in EXCEPTIONAL_PAIRS:
        raise ExceptionalPair(f"({n},{m}) is exceptional; consult the catalog")
    q = canonical_quadruplet(n, m)
    if q is None:
        raise Infeasible(f"no canonical quadruplet for ({n},{m})")
    if not feasibility_ok(q, m):
        raise Infeasible(f"feasibility inequalities fail for ({n},{m})")
    t1, t2, t3, t4 = q

    core = list(range(t4))
    special = t4 if (t2 + t3) == 1 else None
    first_pendant = t4 + (1 if special is not None else 0)
    pendants = list(range(first_pendant, first_pendant + t1))
    plan = ConstructionPlan(n, m, q, core, special, pendants)

    degrees = [0] * n
    present: set[tuple[int, int]] = set()

    def add(step: int, u: int, v: int):
        u, v = min(u, v), max(u, v)
        present.add((u, v))
        degrees[u] += 1
        degrees[v] += 1
        plan.steps.setdefault(step, []).append((u, v))

    # steps 2-3: wire the special vertex to 2 or 3 core vertices
    if t2 == 1:
        for v in core[:2]:
            add(2, special, v)
    if t3 == 1:
        for v in core[:3]:
            add(3, special, v)

    # step 4: spanning tree over special + core; lex-greedy Kruskal
    tree_need = t4 - t2 - 2 * t3 - 1
    if tree_need > 0:
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in present:
            parent[find(u)] = find(v)
        added = 0
        for u in range(t4):
            if added == tree_need:
                break
            for v in range(u + 1, t4):
                if degrees[u] >= 4:
                    break
                if degrees[v] >= 4:
                    continue
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    add(4, u, v)
                    added += 1
                    if added == tree_need:
                        break
        if added != tree_need:
            raise Infeasible("step 4 could not span the core")

    # step 5: remaining core-core edges
    extra_need = m - t1 - t2 - t3 - t4 + 1
    if extra_need > 0:
        core_present = {(u, v) for (u, v) in present if v < t4}
        for u, v in _complete_core(t4, degrees[:t4], core_present, extra_need):
            add(5, u, v)

    # step 6: pendants, round-robin over core vertices with residual capacity
    pool = iter(pendants)
    attached = 0
    while attached < t1:
        progressed = False
        for v in core:
            if degrees[v] < 4 and attached < t1:
                add(6, next(pool), v)
                attached += 1
                progressed = True
        if not progressed:
            raise Infeasible("step 6 ran out of core capacity")

    g = build_graph(n, plan.all_edges())
    return g, plan


def construct_extremal(n: int, m: int) -> ChemicalGraph:
    """A connected member of the extremal family for (n,m); deterministic."""
    return construct_with_plan(n, m)[0]


def is_member_Gnm(g: ChemicalGraph) -> bool:
    """No isolated vertex, at most one vertex of degree 2 or 3, and every
    edge incident to a degree-4 vertex."""
    c = census(g)
    n0, _, n2, n3, _ = c.degree_counts
    if n0 > 0 or n2 + n3 > 1:
        return False
    degs = g.degrees()
    return all(degs[u] == 4 or degs[v] == 4 for u, v in g.edges())
