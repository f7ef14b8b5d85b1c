"""Chromatic, Fortuin-Kasteleyn, rank-generating and Tutte polynomials.

Every polynomial has two routes: a closed-form subset expansion and a
recursion (deletion-contraction), so each can serve as the other's oracle.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .enumeration import covering_graphs, subset_cc
from .graphs import (
    Multigraph,
    SetPartition,
    SimpleGraph,
    canonical_key,
    contract,
    graph_from_key,
    multigraph_key,
)
from .hopf import Character, PolyMorphism, SIMPLE
from .poly import BiPoly, PolyError, UniPoly


# ---------------------------------------------------------------------------
# chromatic polynomial


@lru_cache(maxsize=None)
def _chromatic_key(key: bytes) -> UniPoly:
    g = graph_from_key(key)
    if not g.edges:
        return UniPoly.monomial(g.n)
    e = g.edge_list[0]
    deleted = SimpleGraph(g.n, g.edges - {e})
    labels = list(range(g.n))
    labels[e[1]] = e[0]
    contracted = contract(g, SetPartition.from_labels(labels))
    return _chromatic_key(canonical_key(deleted)) - _chromatic_key(canonical_key(contracted))


def chromatic_polynomial(g: SimpleGraph) -> UniPoly:
    """Deletion-contraction ``P(G) = P(G - e) - P(G / e)``, memoized per isoclass."""
    return _chromatic_key(canonical_key(g))


# ---------------------------------------------------------------------------
# subset expansions


@lru_cache(maxsize=None)
def _subset_stats(key: bytes) -> tuple:
    """``((cc(G|F), |F|), count)`` over all edge subsets ``F``."""
    g = graph_from_key(key)
    el = g.edge_list
    m = len(el)
    counts: dict = {}
    for mask in range(1 << m):
        f = [el[i] for i in range(m) if mask >> i & 1]
        k = (subset_cc(g.n, f), len(f))
        counts[k] = counts.get(k, 0) + 1
    return tuple(sorted(counts.items()))


def fk_polynomial(g: SimpleGraph) -> BiPoly:
    """``Z_G(X, Y) = sum over F of X^cc(G|F) Y^|F|``."""
    return BiPoly({k: c for k, c in _subset_stats(canonical_key(g))})


def rank_generating_polynomial(g: SimpleGraph) -> BiPoly:
    """``S_G(X, Y) = sum over F of X^(r(G) - r(G|F)) Y^n(G|F)``."""
    cc = g.cc
    out: dict = {}
    for (ccf, f), c in _subset_stats(canonical_key(g)):
        # r(G) - r(F) = cc(F) - cc(G);  n(F) = |F| - |V| + cc(F)
        k = (ccf - cc, f - g.n + ccf)
        out[k] = out.get(k, 0) + c
    return BiPoly(out)


def tutte_polynomial(g: SimpleGraph) -> BiPoly:
    """``T_G(X, Y) = S_G(X - 1, Y - 1)``."""
    return rank_generating_polynomial(g).shift(-1, -1)


# ---------------------------------------------------------------------------
# Tutte deletion-contraction on multigraphs


def _is_bridge(n: int, edges: tuple, i: int) -> bool:
    u, v = edges[i]
    rest = edges[:i] + edges[i + 1 :]
    adj = [0] * n
    for a, b in rest:
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    seen = frontier = 1 << u
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        new = adj[low.bit_length() - 1] & ~seen
        seen |= new
        frontier |= new
    return not (seen >> v & 1)


def _contract_multi(m: Multigraph, i: int) -> Multigraph:
    u, v = m.edges[i]
    rest = m.edges[:i] + m.edges[i + 1 :]

    def f(w: int) -> int:
        w = u if w == v else w
        return w - 1 if w > v else w

    return Multigraph(m.n - 1, tuple((f(a), f(b)) for a, b in rest))


_tutte_memo: dict = {}


def tutte_deletion_contraction_oracle(m: Multigraph) -> BiPoly:
    """Tutte polynomial by the bridge / loop / deletion-contraction recursion.

    Contraction keeps parallel edges and turns them into loops, as in the
    classical multigraph setting.  The lexicographically smallest edge is
    expanded first.
    """
    if isinstance(m, SimpleGraph):
        m = Multigraph.from_simple(m)
    key = multigraph_key(m)
    hit = _tutte_memo.get(key)
    if hit is not None:
        return hit
    if not m.edges:
        res = BiPoly.const(1)
    else:
        u, v = m.edges[0]
        deleted = Multigraph(m.n, m.edges[1:])
        if u == v:
            res = BiPoly.y() * tutte_deletion_contraction_oracle(deleted)
        elif _is_bridge(m.n, m.edges, 0):
            res = BiPoly.x() * tutte_deletion_contraction_oracle(deleted)
        else:
            res = tutte_deletion_contraction_oracle(deleted) + tutte_deletion_contraction_oracle(
                _contract_multi(m, 0)
            )
    _tutte_memo[key] = res
    return res


# ---------------------------------------------------------------------------
# conversions between Z and T


def fk_from_tutte(t: BiPoly, n_vertices: int, cc: int) -> BiPoly:
    """``Z = X^cc Y^(|V| - cc) T(X/Y + 1, Y + 1)`` with exact clearing of the ``Y`` denominator."""
    d = max(t.x_degree, 0)
    x, y = BiPoly.x(), BiPoly.y()
    s = x + y
    numer = BiPoly()
    spow = [BiPoly.const(1)]
    for _ in range(d):
        spow.append(spow[-1] * s)
    y1 = y + 1
    for (i, j), c in t.coeffs.items():
        numer = numer + spow[i] * y ** (d - i) * y1**j * c
    shift = n_vertices - cc - d
    if shift >= 0:
        res = numer * BiPoly.monomial(cc, shift)
    else:
        try:
            res = numer.divide_monomial(0, -shift) * BiPoly.monomial(cc, 0)
        except PolyError as exc:
            raise PolyError("Y-denominator does not clear: input is not a Tutte polynomial") from exc
    return res


def tutte_from_fk(z: BiPoly, n_vertices: int, cc: int) -> BiPoly:
    """``T = (X - 1)^-cc (Y - 1)^-|V| Z((X - 1)(Y - 1), Y - 1)``, exact division checked."""
    x, y = BiPoly.x(), BiPoly.y()
    numer = z.substitute((x - 1) * (y - 1), y - 1)
    try:
        return numer.divide_linear_powers(cc, n_vertices)
    except PolyError as exc:
        raise PolyError("(X-1)^cc (Y-1)^|V| does not divide: input is not an FK polynomial") from exc


# ---------------------------------------------------------------------------
# morphisms to K[X] and the characters mu_y, lambda_y


def zeta(g: SimpleGraph, y) -> UniPoly:
    """``Z_G(X, y)``."""
    return fk_polynomial(g).specialize_y(y)


def phi0(g) -> UniPoly:
    """``X^|V|``."""
    return UniPoly.monomial(g.n)


PHI0 = PolyMorphism(phi0, SIMPLE, "phi_0")
PHI_CHR = PolyMorphism(chromatic_polynomial, SIMPLE, "phi_chr")


def zeta_morphism(y) -> PolyMorphism:
    y = Fraction(y)
    return PolyMorphism(lambda g: zeta(g, y), SIMPLE, f"zeta[{y}]")


def character_mu_y(g: SimpleGraph, y) -> Fraction:
    """``(1 + y)^|E|``."""
    return (1 + Fraction(y)) ** g.num_edges


@lru_cache(maxsize=None)
def _covering_edge_poly(key: bytes) -> UniPoly:
    counts: dict = {}
    for h in covering_graphs(graph_from_key(key)):
        counts[h.num_edges] = counts.get(h.num_edges, 0) + 1
    return UniPoly(counts)


def character_lambda_y(g: SimpleGraph, y) -> Fraction:
    """``sum over covering graphs H of y^|E(H)|``."""
    return _covering_edge_poly(canonical_key(g))(y)


def mu_character(y) -> Character:
    y = Fraction(y)
    return Character(lambda g: character_mu_y(g, y), SIMPLE, f"mu[{y}]")


def lambda_character(y) -> Character:
    y = Fraction(y)
    return Character(lambda g: character_lambda_y(g, y), SIMPLE, f"lambda[{y}]")


def add_coproduct_eval(p: UniPoly) -> BiPoly:
    """``p(X1 + X2)`` as a polynomial in ``(X1, X2)`` (stored as ``(X, Y)``)."""
    return p(BiPoly.x() + BiPoly.y())
