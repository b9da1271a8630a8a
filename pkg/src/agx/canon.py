"""Canonical labeling by iterated degree/neighborhood refinement plus
exhaustive individualization within refinement cells.

Exact by construction: the canonical form is the minimum adjacency encoding
over all labelings compatible with the refined partition, searched with
backtracking.  Automorphisms discovered when two leaves collide are used to
prune sibling branches (orbit pruning), which keeps pendant-heavy graphs
tractable.  Disconnected graphs are canonicalized component by component and
the component forms concatenated in sorted order.
"""

from __future__ import annotations

from .graphs import ChemicalGraph
from . import graph6


def _refine(n: int, neigh: list[list[int]], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by the multiset of neighbor colors."""
    while True:
        color = [0] * n
        for ci, cell in enumerate(cells):
            for v in cell:
                color[v] = ci
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(sorted(color[u] for u in neigh[v]))
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                new_cells.append(cell)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


class _Canonizer:
    def __init__(self, n: int, neigh: list[list[int]]):
        self.n = n
        self.neigh = neigh
        self.best_enc: tuple[int, ...] | None = None
        self.best_perm: list[int] | None = None
        self.gens: list[tuple[int, ...]] = []

    def run(self) -> tuple[int, ...]:
        n = self.n
        by_degree: dict[int, list[int]] = {}
        for v in range(n):
            by_degree.setdefault(len(self.neigh[v]), []).append(v)
        cells = [by_degree[d] for d in sorted(by_degree)]
        self._search(_refine(n, self.neigh, cells), ())
        return self.best_enc

    def _leaf(self, cells: list[list[int]]) -> None:
        n = self.n
        perm = [0] * n  # old label -> canonical position
        for pos, cell in enumerate(cells):
            perm[cell[0]] = pos
        rows = [0] * n
        for old in range(n):
            r = 0
            for nb in self.neigh[old]:
                r |= 1 << perm[nb]
            rows[perm[old]] = r
        enc = tuple(rows)
        if self.best_enc is None or enc < self.best_enc:
            self.best_enc = enc
            self.best_perm = perm
        elif enc == self.best_enc:
            # perm and best_perm reach the same form: their mismatch is an
            # automorphism usable for pruning
            inv_best = [0] * n
            for old, pos in enumerate(self.best_perm):
                inv_best[pos] = old
            sigma = tuple(inv_best[perm[v]] for v in range(n))
            if any(sigma[v] != v for v in range(n)) and sigma not in self.gens:
                self.gens.append(sigma)

    def _orbit_reps(self, fixed: tuple[int, ...], cell: list[int]) -> list[int]:
        """One representative per orbit of `cell` under generators fixing `fixed`."""
        applicable = [s for s in self.gens
                      if all(s[v] == v for v in fixed)]
        if not applicable:
            return cell
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in applicable:
            for v in range(self.n):
                ra, rb = find(v), find(s[v])
                if ra != rb:
                    parent[ra] = rb
        seen = set()
        reps = []
        for v in cell:
            r = find(v)
            if r not in seen:
                seen.add(r)
                reps.append(v)
        return reps

    def _search(self, cells: list[list[int]], fixed: tuple[int, ...]) -> None:
        target_idx = None
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                target_idx = i
                break
        if target_idx is None:
            self._leaf(cells)
            return
        cell = cells[target_idx]
        for v in self._orbit_reps(fixed, cell):
            child = (cells[:target_idx]
                     + [[v], [u for u in cell if u != v]]
                     + cells[target_idx + 1:])
            self._search(_refine(self.n, self.neigh, child), fixed + (v,))


def _canon_component(n: int, neigh: list[list[int]]) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    return _Canonizer(n, neigh).run()


def canonical_rows(n: int, rows: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical adjacency rows of the graph given by raw bitmask rows."""
    # split into connected components
    unvisited = (1 << n) - 1
    comps = []
    while unvisited:
        start = (unvisited & -unvisited).bit_length() - 1
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            while frontier:
                v = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        comps.append([v for v in range(n) if seen >> v & 1])
        unvisited &= ~seen
    forms = []
    for verts in comps:
        index = {v: i for i, v in enumerate(verts)}
        neigh = [[index[u] for u in verts if rows[v] >> u & 1] for v in verts]
        forms.append((len(verts), _canon_component(len(verts), neigh)))
    forms.sort()
    out: list[int] = []
    offset = 0
    for size, enc in forms:
        out.extend(r << offset for r in enc)
        offset += size
    return tuple(out)


def canonical_form(g: ChemicalGraph) -> ChemicalGraph:
    """The canonically relabeled copy of g."""
    return ChemicalGraph(g.n, canonical_rows(g.n, g.rows))


def canonical_key(g: ChemicalGraph) -> str:
    """Isomorphism-invariant identifier: graph6 of the canonical form."""
    return graph6.encode(canonical_form(g))
