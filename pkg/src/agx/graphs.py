"""Immutable chemical graphs (simple, undirected, max degree 4, n <= 64).

Adjacency is stored as one int bitmask per vertex, which keeps copies cheap
and makes graphs hashable values that can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (DegreeExceedsFour, DuplicateEdge, LoopEdge,
                     VertexOutOfRange)

MAX_DEGREE = 4
MAX_VERTICES = 64


class ChemicalGraph:
    """A simple undirected graph with every vertex degree at most 4."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: tuple[int, ...]):
        # rows are trusted here; use build_graph for validated construction
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("ChemicalGraph is immutable")

    @property
    def m(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        row = self.rows[v]
        return [u for u in range(self.n) if row >> u & 1]

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def with_edges(self, add: Iterable[tuple[int, int]] = (),
                   remove: Iterable[tuple[int, int]] = ()) -> "ChemicalGraph":
        """New graph with the given edges removed then added; revalidates."""
        rows = list(self.rows)
        for u, v in remove:
            if not (rows[u] >> v & 1):
                raise DuplicateEdge(f"edge ({u},{v}) not present")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        for u, v in add:
            if u == v:
                raise LoopEdge(f"loop at {u}")
            if rows[u] >> v & 1:
                raise DuplicateEdge(f"edge ({u},{v}) already present")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        for v, row in enumerate(rows):
            if row.bit_count() > MAX_DEGREE:
                raise DegreeExceedsFour(f"vertex {v}")
        return ChemicalGraph(self.n, tuple(rows))

    def __eq__(self, other):
        if not isinstance(other, ChemicalGraph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        return f"ChemicalGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Census:
    """Vertex counts by degree and edge counts by endpoint-degree pair."""

    degree_counts: tuple[int, int, int, int, int]
    edge_counts: dict  # {(i, j): count} for 1 <= i <= j <= 4

    @property
    def quadruplet(self) -> tuple[int, int, int, int]:
        return self.degree_counts[1:]


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> ChemicalGraph:
    """Validated construction from an explicit edge list."""
    if not (1 <= n <= MAX_VERTICES):
        raise VertexOutOfRange(f"order {n} outside [1, {MAX_VERTICES}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"endpoint of ({u},{v}) outside [0,{n})")
        if u == v:
            raise LoopEdge(f"loop at {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u},{v}) listed twice")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    for v, row in enumerate(rows):
        if row.bit_count() > MAX_DEGREE:
            raise DegreeExceedsFour(f"vertex {v} has degree {row.bit_count()}")
    return ChemicalGraph(n, tuple(rows))


def census(g: ChemicalGraph) -> Census:
    degs = g.degrees()
    degree_counts = [0] * 5
    for d in degs:
        degree_counts[d] += 1
    edge_counts = {(i, j): 0 for i in range(1, 5) for j in range(i, 5)}
    for u, v in g.edges():
        i, j = sorted((degs[u], degs[v]))
        edge_counts[(i, j)] += 1
    return Census(tuple(degree_counts), edge_counts)


def is_connected(g: ChemicalGraph) -> bool:
    """True iff a single component covers all vertices (K1 is connected)."""
    seen = 1  # bitmask, start from vertex 0
    frontier = 1
    rows = g.rows
    while frontier:
        nxt = 0
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def components(g: ChemicalGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by first vertex."""
    rows = g.rows
    unvisited = (1 << g.n) - 1
    out = []
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
        out.append([v for v in range(g.n) if seen >> v & 1])
        unvisited &= ~seen
    return out


def subgraph(g: ChemicalGraph, vertices: list[int]) -> ChemicalGraph:
    """Induced subgraph, relabeled to 0..len(vertices)-1 in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    rows = [0] * len(vertices)
    for i, v in enumerate(vertices):
        row = g.rows[v]
        for u in vertices:
            if row >> u & 1:
                rows[i] |= 1 << index[u]
    return ChemicalGraph(len(vertices), tuple(rows))
