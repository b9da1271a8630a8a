"""AG-improving graph rewrites with exact delta lower bounds.

Each move kind carries the minimum possible AG increase, obtained by
exhaustive minimization of the corresponding cost expression over its stated
degree ranges; nothing is hard-coded.  The quadruplet swaps act on degree
censuses rather than graphs.  The local-search driver iterates the graph
moves to a fixed point; it is a heuristic, not a complete optimizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .agindex import edge_cost
from .exact import ExactValue, exact_compare, exact_min
from .graphs import ChemicalGraph, components, is_connected, subgraph
from .errors import StaleMove


class MoveKind(Enum):
    ROTATION_A = "rotation_a"
    ROTATION_B = "rotation_b"
    CHAIN_SWAP = "chain_swap"
    QUAD_SWAP_T2 = "quad_swap_t2"
    QUAD_SWAP_T3 = "quad_swap_t3"
    QUAD_SWAP_MIXED = "quad_swap_mixed"
    COMPONENT_EDGE_SWAP = "component_edge_swap"


GRAPH_MOVE_KINDS = (MoveKind.ROTATION_A, MoveKind.ROTATION_B,
                    MoveKind.CHAIN_SWAP, MoveKind.COMPONENT_EDGE_SWAP)

_c = edge_cost


def _delta_rotation_a() -> ExactValue:
    return (_c(1, 4) - _c(2, 3)
            + exact_min(_c(4, i) - _c(2, i) for i in range(1, 5))
            + (exact_min(_c(4, j) - _c(3, j) for j in range(1, 5))).scale(2))


def _delta_rotation_b() -> ExactValue:
    inner = []
    for k in (2, 3):
        inner.append(exact_min(_c(j, k + 1) - _c(j, 2) for j in (2, 3))
                     + exact_min(_c(l, k + 1) - _c(l, k)
                                 for l in range(1, 5)).scale(k))
    return exact_min(_c(1, i) - _c(2, i) for i in (3, 4)) + exact_min(inner)


def _delta_chain_swap() -> ExactValue:
    return exact_min(_c(i, 4) + _c(j, k) - _c(i, j) - _c(4, k)
                     for i in (1, 2, 3)
                     for j in (2, 3)
                     for k in range(i + 1, 5))


def _delta_component_edge_swap() -> ExactValue:
    first = exact_min(
        exact_min(_c(i - 1, j) - _c(i, j) for j in (2, 3, 4)) - _c(4, i)
        for i in (3, 4))
    second = exact_min(
        exact_min(_c(i - 1, k) - _c(i, k) for k in range(1, 5)).scale(i - 2)
        for i in (3, 4))
    return _c(1, 4) + first + second


_DELTAS = {
    MoveKind.ROTATION_A: _delta_rotation_a,
    MoveKind.ROTATION_B: _delta_rotation_b,
    MoveKind.CHAIN_SWAP: _delta_chain_swap,
    MoveKind.QUAD_SWAP_T2: lambda: _c(1, 4) - _c(2, 4).scale(4) + _c(3, 4).scale(3),
    MoveKind.QUAD_SWAP_T3: lambda: _c(2, 4).scale(2) - _c(3, 4).scale(6) + ExactValue(a=4),
    MoveKind.QUAD_SWAP_MIXED: lambda: (_c(1, 4) - _c(2, 4).scale(2)
                                       - _c(3, 4).scale(3) + ExactValue(a=4)),
    MoveKind.COMPONENT_EDGE_SWAP: _delta_component_edge_swap,
}


def delta_lower_bound(kind: MoveKind) -> ExactValue:
    """Exact minimum AG increase guaranteed by one application of `kind`."""
    return _DELTAS[kind]()


# constants internal to the proofs of the zero-edge-type lemmas; exposed so
# the whole table of printed approximations is checkable in one sweep
def lemma_internal_constants() -> dict[str, ExactValue]:
    return {
        "pair22_no_common_neighbor":
            _c(1, 3) - _c(2, 2)
            + exact_min(_c(3, i) - _c(2, i) for i in range(1, 5)).scale(2),
        "pair33_common_neighbor":
            _c(2, 4) - _c(3, 3)
            + exact_min(_c(4, i) - _c(3, i) for i in range(1, 5)).scale(2)
            + exact_min(_c(4, k) + _c(2, k) - _c(3, k).scale(2)
                        for k in (2, 3, 4)),
        "pair33_no_common_neighbor":
            _c(2, 4) - _c(3, 3)
            + exact_min(_c(2, i) - _c(3, i) for i in (2, 3, 4))
            + exact_min(_c(4, j) - _c(3, j) for j in range(1, 5)).scale(3),
    }


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    remove: tuple[tuple[int, int], ...]
    add: tuple[tuple[int, int], ...]


def _find_rotation_a(g: ChemicalGraph) -> Move | None:
    degs = g.degrees()
    for u in range(g.n):
        if degs[u] != 2:
            continue
        v, w = g.neighbors(u)
        if g.has_edge(v, w):
            continue
        # one neighbor of degree 3 donates its pendant role to the other
        for hub, other in ((v, w), (w, v)):
            if degs[hub] == 3:
                return Move(MoveKind.ROTATION_A,
                            remove=((u, other),), add=((hub, other),))
    return None


def _find_rotation_b(g: ChemicalGraph) -> Move | None:
    degs = g.degrees()
    for u in range(g.n):
        if degs[u] != 2:
            continue
        a, b = g.neighbors(u)
        if not g.has_edge(a, b):
            continue
        for v, w in ((a, b), (b, a)):
            if degs[v] >= 3 and degs[w] <= 3:
                for x in range(g.n):
                    if (x not in (u, v, w) and degs[x] in (2, 3)
                            and not g.has_edge(x, w)):
                        return Move(MoveKind.ROTATION_B,
                                    remove=((u, w),), add=((x, w),))
    return None


def _find_chain_swap(g: ChemicalGraph, max_len: int = 6) -> Move | None:
    degs = g.degrees()

    def extend(path: list[int]) -> Move | None:
        if len(path) >= 4:
            v1, v2, vp, vr = path[0], path[1], path[-2], path[-1]
            if (degs[v1] < degs[vr] and degs[v2] <= 3 and degs[vp] == 4
                    and not g.has_edge(v1, vp) and not g.has_edge(v2, vr)):
                return Move(MoveKind.CHAIN_SWAP,
                            remove=((v1, v2), (vp, vr)),
                            add=((v1, vp), (v2, vr)))
        if len(path) == max_len:
            return None
        for nxt in g.neighbors(path[-1]):
            if nxt in path:
                continue
            found = extend(path + [nxt])
            if found is not None:
                return found
        return None

    for start in range(g.n):
        for second in g.neighbors(start):
            found = extend([start, second])
            if found is not None:
                return found
    return None


def _find_component_edge_swap(g: ChemicalGraph) -> Move | None:
    comps = components(g)
    if len(comps) < 2:
        return None
    isolated = [c[0] for c in comps if len(c) == 1]
    if not isolated:
        return None
    degs = g.degrees()
    for verts in comps:
        if len(verts) == 1:
            continue
        sub = subgraph(g, verts)
        if sub.m < len(verts):  # a tree has no cycle
            continue
        for u, v in _cycle_edges(sub, verts):
            for x, y in ((u, v), (v, u)):
                if degs[x] == 4 and degs[y] >= 3:
                    z = next(z for z in isolated if z not in verts)
                    return Move(MoveKind.COMPONENT_EDGE_SWAP,
                                remove=((x, y),), add=((x, z),))
    return None


def _cycle_edges(sub: ChemicalGraph, verts: list[int]) -> list[tuple[int, int]]:
    """Edges of the component (in original labels) that lie on some cycle:
    exactly the edges whose removal keeps their endpoints connected."""
    out = []
    for u, v in sub.edges():
        pruned = sub.with_edges(remove=[(u, v)])
        # BFS from u restricted to the component
        seen = 1 << u
        frontier = seen
        while frontier and not (seen >> v & 1):
            nxt = 0
            while frontier:
                w = (frontier & -frontier).bit_length() - 1
                frontier &= frontier - 1
                nxt |= pruned.rows[w]
            frontier = nxt & ~seen
            seen |= frontier
        if seen >> v & 1:
            out.append((verts[u], verts[v]))
    return out


_FINDERS = {
    MoveKind.ROTATION_A: _find_rotation_a,
    MoveKind.ROTATION_B: _find_rotation_b,
    MoveKind.CHAIN_SWAP: _find_chain_swap,
    MoveKind.COMPONENT_EDGE_SWAP: _find_component_edge_swap,
}


def find_move(g: ChemicalGraph, kind: MoveKind, **kwargs) -> Move | None:
    """First applicable move of the given kind under lexicographic scan."""
    if kind not in _FINDERS:
        return None  # quadruplet swaps do not act on graphs
    return _FINDERS[kind](g, **kwargs)


def apply_move(g: ChemicalGraph, move: Move) -> ChemicalGraph:
    for u, v in move.remove:
        if not g.has_edge(u, v):
            raise StaleMove(f"edge ({u},{v}) no longer present")
    for u, v in move.add:
        if g.has_edge(u, v):
            raise StaleMove(f"edge ({u},{v}) already present")
    return g.with_edges(add=move.add, remove=move.remove)


def quad_swap(kind: MoveKind, q: tuple[int, int, int, int]
              ) -> tuple[int, int, int, int]:
    """The census-space substitutions that reduce t2+t3 while raising f."""
    t1, t2, t3, t4 = q
    if kind is MoveKind.QUAD_SWAP_T2:
        if t2 < 2:
            raise StaleMove("needs t2 >= 2")
        return (t1 + 1, t2 - 2, t3 + 1, t4)
    if kind is MoveKind.QUAD_SWAP_T3:
        if t3 < 2:
            raise StaleMove("needs t3 >= 2")
        return (t1, t2 + 1, t3 - 2, t4 + 1)
    if kind is MoveKind.QUAD_SWAP_MIXED:
        if t2 < 1 or t3 < 1:
            raise StaleMove("needs t2 >= 1 and t3 >= 1")
        return (t1 + 1, t2 - 1, t3 - 1, t4 + 1)
    raise ValueError(f"{kind} is not a quadruplet swap")


def local_search(g: ChemicalGraph, *, trace: list | None = None) -> ChemicalGraph:
    """Apply graph moves until none fits.  Terminates because every move
    strictly increases AG, which is bounded above.  The fixed point need not
    be extremal."""
    while True:
        for kind in GRAPH_MOVE_KINDS:
            move = find_move(g, kind)
            if move is not None:
                g = apply_move(g, move)
                if trace is not None:
                    trace.append(move)
                break
        else:
            return g
