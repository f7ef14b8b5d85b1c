"""Exhaustive generators: spanning/covering graphs and forests, orientations,
totally acyclic partial orientations, and the antipode expressed through them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import (
    MixedGraph,
    OrientedGraph,
    SimpleGraph,
    canonical_key,
    gr,
    is_acyclic_digraph,
    orientation_arcs,
)
from .hopf import GraphSum, SIMPLE

MAX_PO_EDGES = 15

UNORIENTED, FORWARD, BACKWARD = 0, 1, 2


class EnumerationCapError(RuntimeError):
    """The requested enumeration exceeds the desk-scale cap."""


def _find(parent: list, v: int) -> int:
    while parent[v] != v:
        parent[v] = parent[parent[v]]
        v = parent[v]
    return v


def subset_cc(n: int, edges: Sequence[tuple]) -> int:
    """Number of connected components of ``(range(n), edges)``."""
    parent = list(range(n))
    cc = n
    for u, v in edges:
        a, b = _find(parent, u), _find(parent, v)
        if a != b:
            parent[a] = b
            cc -= 1
    return cc


def _subset(edge_list: Sequence[tuple], mask: int) -> list:
    return [e for i, e in enumerate(edge_list) if mask >> i & 1]


# ---------------------------------------------------------------------------
# spanning / covering families


def spanning_graphs(g: SimpleGraph) -> Iterator[SimpleGraph]:
    """All ``2^|E|`` spanning graphs, in edge-mask order."""
    el = g.edge_list
    for mask in range(1 << len(el)):
        yield SimpleGraph(g.n, _subset(el, mask))


def covering_graphs(g: SimpleGraph) -> Iterator[SimpleGraph]:
    """Spanning graphs with the same number of components as ``g``."""
    cc = g.cc
    for h in spanning_graphs(g):
        if h.cc == cc:
            yield h


def _is_forest(h: SimpleGraph) -> bool:
    return h.num_edges == h.n - h.cc


def spanning_forests(g: SimpleGraph) -> Iterator[SimpleGraph]:
    for h in spanning_graphs(g):
        if _is_forest(h):
            yield h


def covering_forests(g: SimpleGraph) -> Iterator[SimpleGraph]:
    for h in covering_graphs(g):
        if _is_forest(h):
            yield h


@dataclass(frozen=True)
class SubgraphFamily:
    """A base graph with one of the tags ``spanning``, ``covering``,
    ``spanning-forest``, ``covering-forest``."""

    base: SimpleGraph
    tag: str

    _GEN = {
        "spanning": spanning_graphs,
        "covering": covering_graphs,
        "spanning-forest": spanning_forests,
        "covering-forest": covering_forests,
    }

    def __post_init__(self) -> None:
        if self.tag not in self._GEN:
            raise ValueError(f"unknown subgraph family {self.tag!r}")

    def __iter__(self) -> Iterator[SimpleGraph]:
        return self._GEN[self.tag](self.base)

    def count(self) -> int:
        return sum(1 for _ in self)


# ---------------------------------------------------------------------------
# orientations


def orientations(g: SimpleGraph) -> Iterator[OrientedGraph]:
    for arcs in orientation_arcs(g):
        yield OrientedGraph(g.n, arcs)


def _out_adj(n: int, arcs) -> list:
    out = [0] * n
    for u, v in arcs:
        out[u] |= 1 << v
    return out


def acyclic_orientations(g: SimpleGraph) -> Iterator[OrientedGraph]:
    for arcs in orientation_arcs(g):
        if is_acyclic_digraph(g.n, _out_adj(g.n, arcs)):
            yield OrientedGraph(g.n, arcs)


def _reach(start: int, adj: Sequence[int]) -> int:
    seen = frontier = 1 << start
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & ~seen
        seen |= new
        frontier |= new
    return seen


def components_strongly_connected(h: OrientedGraph) -> bool:
    """Every weak component of ``h`` is strongly connected (isolated vertices count)."""
    out = h.out_adj
    inn = [0] * h.n
    for u, v in h.arcs:
        inn[v] |= 1 << u
    for comp in h.component_masks:
        v = (comp & -comp).bit_length() - 1
        if _reach(v, out) != comp or _reach(v, inn) != comp:
            return False
    return True


def strongly_connected_orientations(g: SimpleGraph) -> Iterator[OrientedGraph]:
    """Orientations in which each connected component of ``g`` is strongly connected."""
    for h in orientations(g):
        if components_strongly_connected(h):
            yield h


def stanley_count(g: SimpleGraph) -> int:
    """Number of acyclic orientations."""
    return sum(1 for _ in acyclic_orientations(g))


# ---------------------------------------------------------------------------
# partial orientations


@dataclass(frozen=True)
class PartialOrientationState:
    """Per-edge state over ``base.edge_list``: 0 unoriented, 1 ``u->v``, 2 ``v->u``."""

    base: SimpleGraph
    states: tuple

    def __post_init__(self) -> None:
        if len(self.states) != self.base.num_edges or any(s not in (0, 1, 2) for s in self.states):
            raise ValueError("one state in {0, 1, 2} per edge expected")

    def decode(self) -> MixedGraph:
        edges, arcs = [], []
        for (u, v), s in zip(self.base.edge_list, self.states):
            if s == UNORIENTED:
                edges.append((u, v))
            elif s == FORWARD:
                arcs.append((u, v))
            else:
                arcs.append((v, u))
        return MixedGraph(self.base.n, edges, arcs)


def _tac(n: int, edges: Sequence[tuple], arcs: Sequence[tuple]) -> bool:
    """Total acyclicity: contract undirected components, then the arc digraph must be acyclic.

    An arc inside one undirected component closes a mixed walk immediately.
    """
    parent = list(range(n))
    for u, v in edges:
        a, b = _find(parent, u), _find(parent, v)
        if a != b:
            parent[a] = b
    roots = [_find(parent, v) for v in range(n)]
    index = {r: i for i, r in enumerate(sorted(set(roots)))}
    k = len(index)
    out = [0] * k
    for u, v in arcs:
        a, b = index[roots[u]], index[roots[v]]
        if a == b:
            return False
        out[a] |= 1 << b
    return is_acyclic_digraph(k, out)


def is_totally_acyclic(h: MixedGraph) -> bool:
    """No closed walk of length >= 2 along edges (either way) and arcs (forward) using an arc."""
    return _tac(h.n, sorted(h.edges), sorted(h.arcs))


def _check_cap(g: SimpleGraph) -> None:
    if g.num_edges > MAX_PO_EDGES:
        raise EnumerationCapError(
            f"partial orientations capped at {MAX_PO_EDGES} edges, graph has {g.num_edges}"
        )


def po_tac_states(g: SimpleGraph) -> Iterator[tuple]:
    """Per-edge states of the totally acyclic partial orientations, lexicographic.

    A prefix that already closes a mixed walk cannot be completed (adding
    edges or arcs never removes a walk), so such branches are cut.
    """
    _check_cap(g)
    el = g.edge_list
    m = len(el)
    n = g.n
    states: list = []

    def rec(i: int, edges: list, arcs: list) -> Iterator[tuple]:
        if i == m:
            yield tuple(states)
            return
        u, v = el[i]
        for s, e2, a2 in (
            (UNORIENTED, edges + [(u, v)], arcs),
            (FORWARD, edges, arcs + [(u, v)]),
            (BACKWARD, edges, arcs + [(v, u)]),
        ):
            if (s == UNORIENTED and not arcs) or _tac(n, e2, a2):
                states.append(s)
                yield from rec(i + 1, e2, a2)
                states.pop()

    yield from rec(0, [], [])


def totally_acyclic_partial_orientations(g: SimpleGraph) -> Iterator[MixedGraph]:
    for st in po_tac_states(g):
        yield PartialOrientationState(g, st).decode()


def all_partial_orientations(g: SimpleGraph) -> Iterator[MixedGraph]:
    """All ``3^|E|`` partial orientations, lexicographic in per-edge state."""
    _check_cap(g)
    from itertools import product

    for st in product((UNORIENTED, FORWARD, BACKWARD), repeat=g.num_edges):
        yield PartialOrientationState(g, st).decode()


def unoriented_mask_counts(g: SimpleGraph) -> dict:
    """``{mask of unoriented edges: number of PO_tac members}``."""
    counts: dict = {}
    for st in po_tac_states(g):
        mask = 0
        for i, s in enumerate(st):
            if s == UNORIENTED:
                mask |= 1 << i
        counts[mask] = counts.get(mask, 0) + 1
    return counts


def antipode_orientation_formula(g: SimpleGraph) -> GraphSum:
    """``sum over H in PO_tac(G) of (-1)^cc(gr0 H) gr0(H)``."""
    el = g.edge_list
    acc: dict = {}
    for mask, count in unoriented_mask_counts(g).items():
        h = SimpleGraph(g.n, _subset(el, mask))
        k = canonical_key(h)
        acc[k] = acc.get(k, 0) + (-1) ** h.cc * count
    return GraphSum(acc, SIMPLE)


def check_partial_orientation(h: MixedGraph, g: SimpleGraph) -> bool:
    """``h`` is a partial orientation of ``g``."""
    return gr(h) == g
