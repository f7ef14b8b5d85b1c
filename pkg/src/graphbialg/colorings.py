"""Counting oracles: proper colorings, compatible vertex-edge coloring pairs,
and the signed sums over oriented pair colorings (OPC triples).

A compatible ``(x, y)``-pair is a vertex coloring in ``[x]`` plus edge values
in ``{0..y}`` where an edge is nonzero exactly when its ends share a color.
Counts are taken per vertex coloring: a monochromatic edge contributes a
factor ``y`` (its nonzero choices), any other edge the single value 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterator

from .enumeration import po_tac_states, totally_acyclic_partial_orientations, UNORIENTED
from .graphs import MixedGraph, SimpleGraph, canonical_key, graph_from_key, gr0


class ColoringRangeError(ValueError):
    pass


@dataclass(frozen=True)
class PairColoring:
    vertex_colors: tuple
    edge_values: dict

    def is_compatible(self, g: SimpleGraph) -> bool:
        for (u, v), val in self.edge_values.items():
            if (val != 0) != (self.vertex_colors[u] == self.vertex_colors[v]):
                return False
        return True


@dataclass(frozen=True)
class OpcTriple:
    h: MixedGraph
    coloring: PairColoring


def proper_coloring_count(g: SimpleGraph, x: int) -> int:
    """Brute force over all ``x^|V|`` vertex colorings."""
    el = g.edge_list
    return sum(
        1 for c in product(range(x), repeat=g.n) if all(c[u] != c[v] for u, v in el)
    )


@lru_cache(maxsize=None)
def _mono_weighted_key(key: bytes, x: int, w: Fraction) -> Fraction:
    g = graph_from_key(key)
    el = g.edge_list
    hist: dict = {}
    for c in product(range(x), repeat=g.n):
        k = 0
        for u, v in el:
            if c[u] == c[v]:
                k += 1
        hist[k] = hist.get(k, 0) + 1
    return sum((cnt * w**k for k, cnt in hist.items()), Fraction(0))


def mono_weighted_sum(g: SimpleGraph, x: int, w) -> Fraction:
    """``sum over c: V -> [x] of w^(number of monochromatic edges)``."""
    return _mono_weighted_key(canonical_key(g), x, Fraction(w))


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ColoringRangeError(msg)


def compatible_pair_count(g: SimpleGraph, x: int, y: int) -> int:
    """``|PC_{x,y}(G)|``: edge values in ``{0..y}``."""
    _need(x >= 0 and y >= 0, "x and y must be non-negative")
    return int(mono_weighted_sum(g, x, y))


def compatible_pair_signed_sum(g: SimpleGraph, x: int, y: int) -> int:
    """Signed sum over ``PC_{x,y-1}`` with sign ``(-1)^(nonzero edge values)``; equals ``Z_G(x, -y)``."""
    _need(x >= 0 and y >= 1, "need x >= 0 and y >= 1")
    return int(mono_weighted_sum(g, x, -(y - 1)))


def iter_pair_colorings(g: SimpleGraph, x: int, y: int) -> Iterator[PairColoring]:
    """Every compatible ``(x, y)``-pair, materialized.  Exponential; for tiny graphs."""
    el = g.edge_list
    for cv in product(range(x), repeat=g.n):
        for ce in product(range(y + 1), repeat=len(el)):
            pc = PairColoring(cv, dict(zip(el, ce)))
            if pc.is_compatible(g):
                yield pc


def iter_opc_triples(g: SimpleGraph, x: int, y: int) -> Iterator[OpcTriple]:
    """Every triple ``(H, c_V, c_E)``, materialized.  For tiny graphs."""
    for h in totally_acyclic_partial_orientations(g):
        for pc in iter_pair_colorings(gr0(h), x, y):
            yield OpcTriple(h, pc)


def _opc_sum(g: SimpleGraph, x: int, w) -> Fraction:
    el = g.edge_list
    counts: dict = {}
    for st in po_tac_states(g):
        mask = 0
        for i, s in enumerate(st):
            if s == UNORIENTED:
                mask |= 1 << i
        counts[mask] = counts.get(mask, 0) + 1
    total = Fraction(0)
    for mask, cnt in counts.items():
        h = SimpleGraph(g.n, [e for i, e in enumerate(el) if mask >> i & 1])
        total += cnt * (-1) ** h.cc * mono_weighted_sum(h, x, w)
    return total


def opc_signed_sum(g: SimpleGraph, x: int, y: int, variant: str = "nonneg") -> int:
    """``nonneg`` (``y >= -1``): sum over ``OPC_{x,y+1}`` of ``(-1)^cc(gr0 H)``, equal to ``Z_G(-x, y)``.

    ``negative`` (``y >= 1``): sum over ``OPC_{x,y-1}`` of
    ``(-1)^(cc(gr0 H) + nonzero edge values)``, equal to ``Z_G(-x, -y)``.
    """
    _need(x >= 0, "x must be non-negative")
    if variant == "nonneg":
        _need(y >= -1, "nonneg variant needs y >= -1")
        return int(_opc_sum(g, x, y + 1))
    if variant == "negative":
        _need(y >= 1, "negative variant needs y >= 1")
        return int(_opc_sum(g, x, -(y - 1)))
    raise ColoringRangeError(f"unknown variant {variant!r}")


QUADRANTS = ("pos", "negneg", "negx", "negy")


def tutte_negative_check(g: SimpleGraph, x: int, y: int, quadrant: str) -> Fraction:
    """Tutte value from coloring counts.

    ``pos``    ``T(x, y)``, ``x, y >= 2``, via ``|PC_{(x-1)(y-1), y}|``
    ``negneg`` ``T(-x, -y)``, ``x, y >= 0``, via the signed pair sum
    ``negx``   ``T(-x, y)``, ``x >= 0, y >= 2``, via OPC triples
    ``negy``   ``T(x, -y)``, ``x >= 2, y >= 0``, via signed OPC triples
    """
    n, cc = g.n, g.cc
    if quadrant == "pos":
        _need(x >= 2 and y >= 2, "pos quadrant needs x, y >= 2")
        return Fraction(compatible_pair_count(g, (x - 1) * (y - 1), y), (x - 1) ** cc * (y - 1) ** n)
    if quadrant == "negneg":
        _need(x >= 0 and y >= 0, "negneg quadrant needs x, y >= 0")
        s = mono_weighted_sum(g, (1 + x) * (1 + y), -y)
        return (-1) ** (cc + n) * s / ((x + 1) ** cc * (y + 1) ** n)
    if quadrant == "negx":
        _need(x >= 0 and y >= 2, "negx quadrant needs x >= 0, y >= 2")
        s = _opc_sum(g, (x + 1) * (y - 1), y)
        return (-1) ** cc * s / ((x + 1) ** cc * (y - 1) ** n)
    if quadrant == "negy":
        _need(x >= 2 and y >= 0, "negy quadrant needs x >= 2, y >= 0")
        s = _opc_sum(g, (x - 1) * (y + 1), -y)
        return (-1) ** n * s / ((x - 1) ** cc * (y + 1) ** n)
    raise ColoringRangeError(f"unknown quadrant {quadrant!r}")
