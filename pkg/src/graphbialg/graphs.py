"""Simple, oriented and mixed graphs, set partitions, contraction and restriction.

Vertices are always ``0..n-1``.  Edges are stored as sorted pairs ``(u, v)``
with ``u < v``; arcs are ordered pairs.  All graph values are immutable and
hashable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence, Union

from .canon import canonical_order

MAX_VERTICES = 64

KIND_SIMPLE = 0
KIND_ORIENTED = 1
KIND_MIXED = 2

# relation codes for the canonical labeling (bit 1: edge, bit 2: arc i->j, bit 4: arc j->i)
_EDGE, _OUT, _IN = 1, 2, 4


class GraphError(ValueError):
    """Raised on malformed graphs, partitions or vertex/edge selections."""


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
    if n > MAX_VERTICES:
        raise GraphError(f"at most {MAX_VERTICES} vertices are supported, got {n}")


def _norm_edges(n: int, edges: Iterable[Sequence[int]]) -> frozenset:
    out = set()
    for e in edges:
        u, v = e
        if u == v:
            raise GraphError(f"loop {{{u},{v}}} is not allowed in a simple graph")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {{{u},{v}}} out of range for n={n}")
        out.add((u, v) if u < v else (v, u))
    return frozenset(out)


def _norm_arcs(n: int, arcs: Iterable[Sequence[int]]) -> frozenset:
    out = set()
    for a in arcs:
        u, v = a
        if u == v:
            raise GraphError(f"loop arc ({u},{v}) is not allowed")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"arc ({u},{v}) out of range for n={n}")
        out.add((u, v))
    return frozenset(out)


def _components_from_adj(n: int, adj: Sequence[int]) -> list[int]:
    """Component bitmasks, ordered by smallest vertex."""
    seen = 0
    comps = []
    for v in range(n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            w = low.bit_length() - 1
            new = adj[w] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        comps.append(comp)
    return comps


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class SimpleGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        _check_n(self.n)
        object.__setattr__(self, "edges", _norm_edges(self.n, self.edges))

    @cached_property
    def edge_list(self) -> tuple:
        return tuple(sorted(self.edges))

    @cached_property
    def adj(self) -> tuple:
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def component_masks(self) -> tuple:
        return tuple(_components_from_adj(self.n, self.adj))

    @property
    def cc(self) -> int:
        return len(self.component_masks)

    def is_connected(self) -> bool:
        return self.cc <= 1

    def __repr__(self) -> str:
        return f"SimpleGraph({self.n}, {list(self.edge_list)})"


@dataclass(frozen=True)
class OrientedGraph:
    n: int
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        _check_n(self.n)
        object.__setattr__(self, "arcs", _norm_arcs(self.n, self.arcs))

    @cached_property
    def arc_list(self) -> tuple:
        return tuple(sorted(self.arcs))

    @cached_property
    def out_adj(self) -> tuple:
        out = [0] * self.n
        for u, v in self.arcs:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def adj(self) -> tuple:
        """Underlying undirected adjacency."""
        adj = [0] * self.n
        for u, v in self.arcs:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return tuple(adj)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @cached_property
    def component_masks(self) -> tuple:
        return tuple(_components_from_adj(self.n, self.adj))

    @property
    def cc(self) -> int:
        return len(self.component_masks)

    def __repr__(self) -> str:
        return f"OrientedGraph({self.n}, {list(self.arc_list)})"


@dataclass(frozen=True)
class MixedGraph:
    n: int
    edges: frozenset = field(default_factory=frozenset)
    arcs: frozenset = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        _check_n(self.n)
        edges = _norm_edges(self.n, self.edges)
        arcs = _norm_arcs(self.n, self.arcs)
        for u, v in arcs:
            if (v, u) in arcs:
                raise GraphError(f"arcs ({u},{v}) and ({v},{u}) cannot coexist in a mixed graph")
            if (min(u, v), max(u, v)) in edges:
                raise GraphError(f"pair {{{u},{v}}} is both an edge and an arc")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "arcs", arcs)

    def __repr__(self) -> str:
        return f"MixedGraph({self.n}, edges={sorted(self.edges)}, arcs={sorted(self.arcs)})"


AnyGraph = Union[SimpleGraph, OrientedGraph, MixedGraph]


@dataclass(frozen=True)
class SetPartition:
    """A partition of ``0..n-1``; blocks are sorted tuples ordered by minimum."""

    n: int
    blocks: tuple

    def __post_init__(self) -> None:
        blocks = [tuple(sorted(b)) for b in self.blocks]
        if any(not b for b in blocks):
            raise GraphError("partition blocks must be nonempty")
        flat = sorted(v for b in blocks for v in b)
        if flat != list(range(self.n)):
            raise GraphError(f"blocks {blocks} do not partition range({self.n})")
        object.__setattr__(self, "blocks", tuple(sorted(blocks)))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetPartition":
        return cls(n, tuple(tuple(_bits(m)) for m in masks))

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls(n, tuple((v,) for v in range(n)))

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "SetPartition":
        groups: dict = {}
        for v, lab in enumerate(labels):
            groups.setdefault(lab, []).append(v)
        return cls(len(labels), tuple(groups.values()))

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    @cached_property
    def block_index(self) -> tuple:
        idx = [0] * self.n
        for i, b in enumerate(self.blocks):
            for v in b:
                idx[v] = i
        return tuple(idx)

    @cached_property
    def masks(self) -> tuple:
        return tuple(sum(1 << v for v in b) for b in self.blocks)


@dataclass(frozen=True)
class Multigraph:
    """Loops and parallel edges allowed; only used by the Tutte deletion-contraction oracle."""

    n: int
    edges: tuple = ()

    def __post_init__(self) -> None:
        _check_n(self.n)
        norm = []
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge {{{u},{v}}} out of range for n={self.n}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    @classmethod
    def from_simple(cls, g: SimpleGraph) -> "Multigraph":
        return cls(g.n, g.edge_list)


# ---------------------------------------------------------------------------
# products and subgraphs


def disjoint_union(g, h):
    """The product ``GH``: vertices of ``h`` are shifted by ``g.n``."""
    if type(g) is not type(h):
        raise GraphError(f"cannot multiply {type(g).__name__} and {type(h).__name__}")
    k = g.n
    if isinstance(g, SimpleGraph):
        return SimpleGraph(g.n + h.n, g.edges | {(u + k, v + k) for u, v in h.edges})
    if isinstance(g, OrientedGraph):
        return OrientedGraph(g.n + h.n, g.arcs | {(u + k, v + k) for u, v in h.arcs})
    return MixedGraph(
        g.n + h.n,
        g.edges | {(u + k, v + k) for u, v in h.edges},
        g.arcs | {(u + k, v + k) for u, v in h.arcs},
    )


def _relabel_map(n: int, vertices: Iterable[int]) -> dict:
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < n:
            raise GraphError(f"vertex {v} out of range for n={n}")
    return {v: i for i, v in enumerate(vs)}


def induced_subgraph(g, vertices: Iterable[int]):
    """``G|_I``; kept vertices are relabeled ``0..|I|-1`` in increasing order."""
    m = _relabel_map(g.n, vertices)
    if isinstance(g, SimpleGraph):
        return SimpleGraph(len(m), [(m[u], m[v]) for u, v in g.edges if u in m and v in m])
    if isinstance(g, OrientedGraph):
        return OrientedGraph(len(m), [(m[u], m[v]) for u, v in g.arcs if u in m and v in m])
    return MixedGraph(
        len(m),
        [(m[u], m[v]) for u, v in g.edges if u in m and v in m],
        [(m[u], m[v]) for u, v in g.arcs if u in m and v in m],
    )


def induced_mask(g, mask: int):
    """Bitmask form of :func:`induced_subgraph`, cached for hot loops."""
    return _induced_mask(g, mask)


@lru_cache(maxsize=1 << 18)
def _induced_mask(g, mask: int):
    return induced_subgraph(g, _bits(mask))


def spanning_subgraph(g: SimpleGraph, edge_subset: Iterable[Sequence[int]]) -> SimpleGraph:
    """``G_{|F}``: same vertices, edge set exactly ``F``."""
    f = _norm_edges(g.n, edge_subset)
    extra = f - g.edges
    if extra:
        raise GraphError(f"{sorted(extra)} are not edges of the graph")
    return SimpleGraph(g.n, f)


def connected_components(g) -> SetPartition:
    return SetPartition.from_masks(g.n, g.component_masks)


def rank(g: SimpleGraph) -> int:
    return g.n - g.cc


def nullity(g: SimpleGraph) -> int:
    return g.num_edges - rank(g)


# ---------------------------------------------------------------------------
# partitions with connected blocks


def _connected_sets(adj: Sequence[int], v: int, allowed: int) -> Iterator[int]:
    """Every connected vertex set inside ``allowed`` containing ``v``, once each."""

    def extend(s: int, ext: int, excl: int) -> Iterator[int]:
        yield s
        while ext:
            low = ext & -ext
            ext ^= low
            w = low.bit_length() - 1
            new_s = s | low
            new_ext = (ext | adj[w]) & allowed & ~new_s & ~excl
            yield from extend(new_s, new_ext, excl)
            excl |= low

    start = 1 << v
    yield from extend(start, adj[v] & allowed & ~start, start)


def connected_partition_masks(g) -> Iterator[tuple]:
    """Partitions with connected blocks, as tuples of block bitmasks."""
    n = g.n
    adj = g.adj
    full = (1 << n) - 1

    def rec(remaining: int, acc: tuple) -> Iterator[tuple]:
        if not remaining:
            yield acc
            return
        low = remaining & -remaining
        v = low.bit_length() - 1
        for block in _connected_sets(adj, v, remaining):
            yield from rec(remaining & ~block, acc + (block,))

    yield from rec(full, ())


def connected_partitions(g) -> Iterator[SetPartition]:
    """The set ``E_c(G)``: partitions whose every block induces a connected subgraph.

    Blocks are grown from the smallest unassigned vertex through adjacent
    vertices only, so nothing is generated and filtered.
    """
    for masks in connected_partition_masks(g):
        yield SetPartition.from_masks(g.n, masks)


def all_set_partitions(n: int) -> Iterator[SetPartition]:
    """Every set partition of ``0..n-1`` (restricted growth strings)."""

    def rec(i: int, labels: list, k: int) -> Iterator[SetPartition]:
        if i == n:
            yield SetPartition.from_labels(labels)
            return
        for lab in range(k + 1):
            labels.append(lab)
            yield from rec(i + 1, labels, max(k, lab + 1))
            labels.pop()

    if n == 0:
        yield SetPartition(0, ())
        return
    yield from rec(0, [], 0)


def _check_partition(g, p: SetPartition) -> None:
    if p.n != g.n:
        raise GraphError(f"partition of {p.n} points used on a graph with {g.n} vertices")


def contract(g, p: SetPartition):
    """``G/~``: one vertex per block; parallel images merge and loops vanish."""
    _check_partition(g, p)
    idx = p.block_index
    k = p.block_count
    if isinstance(g, SimpleGraph):
        return SimpleGraph(k, [(idx[u], idx[v]) for u, v in g.edges if idx[u] != idx[v]])
    if isinstance(g, OrientedGraph):
        return OrientedGraph(k, [(idx[u], idx[v]) for u, v in g.arcs if idx[u] != idx[v]])
    raise GraphError("contraction is defined for simple and oriented graphs")


def restrict(g, p: SetPartition):
    """``G|~``: same vertices, only edges (arcs) inside a block."""
    _check_partition(g, p)
    idx = p.block_index
    if isinstance(g, SimpleGraph):
        return SimpleGraph(g.n, [(u, v) for u, v in g.edges if idx[u] == idx[v]])
    if isinstance(g, OrientedGraph):
        return OrientedGraph(g.n, [(u, v) for u, v in g.arcs if idx[u] == idx[v]])
    raise GraphError("restriction is defined for simple and oriented graphs")


contract_oriented = contract
restrict_oriented = restrict


def gr(h: MixedGraph) -> SimpleGraph:
    """Forget the direction of every arc."""
    return SimpleGraph(h.n, set(h.edges) | {(min(u, v), max(u, v)) for u, v in h.arcs})


def gr0(h: MixedGraph) -> SimpleGraph:
    """Drop every arc, keep the undirected edges."""
    return SimpleGraph(h.n, h.edges)


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, combinations(range(n), 2))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n, [(i, (i + 1) % n) for i in range(n)])


def edgeless_graph(n: int) -> SimpleGraph:
    return SimpleGraph(n)


# ---------------------------------------------------------------------------
# canonical keys


def _relation_matrix(g) -> list:
    n = g.n
    rel = [[0] * n for _ in range(n)]
    if isinstance(g, (SimpleGraph, MixedGraph)):
        for u, v in g.edges:
            rel[u][v] |= _EDGE
            rel[v][u] |= _EDGE
    if isinstance(g, (OrientedGraph, MixedGraph)):
        for u, v in g.arcs:
            rel[u][v] |= _OUT
            rel[v][u] |= _IN
    return rel


def _kind(g) -> int:
    if isinstance(g, SimpleGraph):
        return KIND_SIMPLE
    if isinstance(g, OrientedGraph):
        return KIND_ORIENTED
    if isinstance(g, MixedGraph):
        return KIND_MIXED
    raise GraphError(f"not a graph: {g!r}")


@lru_cache(maxsize=1 << 20)
def canonical_key(g: AnyGraph) -> bytes:
    """Bytes identifying the isomorphism class of ``g``.

    Layout: kind, vertex count, then one relation code per vertex pair of the
    canonical labeling in column order.  Isomorphisms respect edge versus arc
    and arc direction.
    """
    if g.n > 255:
        raise GraphError("canonical keys are limited to 255 vertices")
    _, cert = canonical_order(g.n, _relation_matrix(g))
    # certificate = n vertex labels (all zero) followed by pair codes
    return bytes((_kind(g), g.n)) + bytes(cert[g.n:])


@lru_cache(maxsize=1 << 20)
def graph_from_key(key: bytes) -> AnyGraph:
    """Decode the canonical representative stored in a key."""
    kind, n = key[0], key[1]
    codes = key[2:]
    edges, arcs = [], []
    k = 0
    for j in range(n):
        for i in range(j):
            c = codes[k]
            k += 1
            if c & _EDGE:
                edges.append((i, j))
            if c & _OUT:
                arcs.append((i, j))
            if c & _IN:
                arcs.append((j, i))
    if kind == KIND_SIMPLE:
        return SimpleGraph(n, edges)
    if kind == KIND_ORIENTED:
        return OrientedGraph(n, arcs)
    return MixedGraph(n, edges, arcs)


def canonical_form(g: AnyGraph) -> AnyGraph:
    return graph_from_key(canonical_key(g))


def is_isomorphic(g: AnyGraph, h: AnyGraph) -> bool:
    return canonical_key(g) == canonical_key(h)


def relabel(g: AnyGraph, perm: Sequence[int]) -> AnyGraph:
    """Rename vertex ``v`` to ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling must be a permutation of the vertices")
    if isinstance(g, SimpleGraph):
        return SimpleGraph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
    if isinstance(g, OrientedGraph):
        return OrientedGraph(g.n, [(perm[u], perm[v]) for u, v in g.arcs])
    return MixedGraph(
        g.n, [(perm[u], perm[v]) for u, v in g.edges], [(perm[u], perm[v]) for u, v in g.arcs]
    )


def multigraph_key(m: Multigraph) -> tuple:
    """Isomorphism-class key of a multigraph (multiplicities and loop counts kept)."""
    n = m.n
    rel = [[0] * n for _ in range(n)]
    loops = [0] * n
    for u, v in m.edges:
        if u == v:
            loops[u] += 1
        else:
            rel[u][v] += 1
            rel[v][u] += 1
    _, cert = canonical_order(n, rel, loops)
    return (n,) + cert


# ---------------------------------------------------------------------------
# isoclass generation


def simple_isoclasses(n: int) -> list:
    """Canonical representatives of all simple graphs on ``n`` vertices.

    Grown vertex by vertex: every graph on ``n`` vertices is a graph on
    ``n - 1`` vertices plus one vertex joined to some subset.
    """
    return [graph_from_key(k) for k in _simple_iso_keys(n)]


@lru_cache(maxsize=None)
def _simple_iso_keys(n: int) -> tuple:
    if n == 0:
        return (canonical_key(SimpleGraph(0)),)
    keys = set()
    for k in _simple_iso_keys(n - 1):
        base = graph_from_key(k)
        for mask in range(1 << (n - 1)):
            extra = [(v, n - 1) for v in _bits(mask)]
            keys.add(canonical_key(SimpleGraph(n, base.edges | set(extra))))
    return tuple(sorted(keys))


def simple_isoclasses_upto(max_vertices: int, max_edges: int | None = None) -> list:
    out = []
    for n in range(max_vertices + 1):
        for g in simple_isoclasses(n):
            if max_edges is None or g.num_edges <= max_edges:
                out.append(g)
    return out


@lru_cache(maxsize=None)
def _oriented_iso_keys(n: int) -> tuple:
    if n == 0:
        return (canonical_key(OrientedGraph(0)),)
    keys = set()
    new = n - 1
    for k in _oriented_iso_keys(n - 1):
        base = graph_from_key(k)
        # each old vertex: no arc, arc in, arc out, or both
        for states in range(4 ** new):
            arcs = set(base.arcs)
            s = states
            for v in range(new):
                st = s & 3
                s >>= 2
                if st & 1:
                    arcs.add((v, new))
                if st & 2:
                    arcs.add((new, v))
            keys.add(canonical_key(OrientedGraph(n, arcs)))
    return tuple(sorted(keys))


def oriented_isoclasses(n: int) -> list:
    """Canonical representatives of oriented graphs on ``n`` vertices (2-cycles allowed)."""
    return [graph_from_key(k) for k in _oriented_iso_keys(n)]


def oriented_isoclasses_upto(max_vertices: int) -> list:
    return [g for n in range(max_vertices + 1) for g in oriented_isoclasses(n)]


def render(g: AnyGraph) -> str:
    """Short human-readable rendering, e.g. ``n=3 0-1 1-2`` or ``n=2 0>1``."""
    parts = [f"n={g.n}"]
    if isinstance(g, (SimpleGraph, MixedGraph)):
        parts += [f"{u}-{v}" for u, v in sorted(g.edges)]
    if isinstance(g, (OrientedGraph, MixedGraph)):
        parts += [f"{u}>{v}" for u, v in sorted(g.arcs)]
    return " ".join(parts)


# ---------------------------------------------------------------------------
# orientation helpers shared by the Hopf and enumeration layers


def is_acyclic_digraph(n: int, out_adj: Sequence[int]) -> bool:
    """Kahn's algorithm on bitmask out-neighbourhoods."""
    indeg = [0] * n
    for u in range(n):
        m = out_adj[u]
        while m:
            low = m & -m
            indeg[low.bit_length() - 1] += 1
            m ^= low
    stack = [v for v in range(n) if not indeg[v]]
    seen = 0
    while stack:
        u = stack.pop()
        seen += 1
        m = out_adj[u]
        while m:
            low = m & -m
            w = low.bit_length() - 1
            indeg[w] -= 1
            if not indeg[w]:
                stack.append(w)
            m ^= low
    return seen == n


def is_acyclic(g: OrientedGraph) -> bool:
    return is_acyclic_digraph(g.n, g.out_adj)


def orientation_arcs(g: SimpleGraph) -> Iterator[tuple]:
    """Arc tuples of all ``2^|E|`` orientations; bit ``i`` of the counter reverses edge ``i``."""
    el = g.edge_list
    for mask in range(1 << len(el)):
        yield tuple((v, u) if mask >> i & 1 else (u, v) for i, (u, v) in enumerate(el))
