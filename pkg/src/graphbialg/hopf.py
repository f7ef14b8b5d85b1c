"""Formal sums of graph isoclasses and the double bialgebra operations on them.

Three basis flavors are supported:

``simple``
    isoclasses of simple graphs; ``Delta`` splits the vertex set in two.
``oriented``
    isoclasses of oriented graphs (2-cycles allowed); ``Delta`` sums over ideals.
``acyclic``
    the quotient of ``oriented`` by graphs with an oriented cycle; every
    coproduct is followed by the projection that kills cyclic factors.

Scalars are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Union

from .graphs import (
    KIND_ORIENTED,
    KIND_SIMPLE,
    GraphError,
    OrientedGraph,
    SimpleGraph,
    _bits,
    canonical_key,
    connected_partition_masks,
    contract,
    disjoint_union,
    graph_from_key,
    induced_mask,
    is_acyclic,
    orientation_arcs,
    restrict,
    SetPartition,
)
from .poly import UniPoly

SIMPLE = "simple"
ORIENTED = "oriented"
ACYCLIC = "acyclic"
FLAVORS = (SIMPLE, ORIENTED, ACYCLIC)

EMPTY_SIMPLE = canonical_key(SimpleGraph(0))
EMPTY_ORIENTED = canonical_key(OrientedGraph(0))


class FlavorError(GraphError):
    pass


class NotInvertibleError(ArithmeticError):
    pass


def empty_key(flavor: str) -> bytes:
    return EMPTY_SIMPLE if flavor == SIMPLE else EMPTY_ORIENTED


@lru_cache(maxsize=None)
def key_is_acyclic(key: bytes) -> bool:
    g = graph_from_key(key)
    return not isinstance(g, OrientedGraph) or is_acyclic(g)


def _flavor_of_graph(g) -> str:
    if isinstance(g, SimpleGraph):
        return SIMPLE
    if isinstance(g, OrientedGraph):
        return ORIENTED
    raise FlavorError(f"{type(g).__name__} is not a Hopf basis element")


def _check_key(key: bytes, flavor: str) -> None:
    want = KIND_SIMPLE if flavor == SIMPLE else KIND_ORIENTED
    if key[0] != want:
        raise FlavorError(f"graph of kind {key[0]} in a {flavor} sum")
    if flavor == ACYCLIC and not key_is_acyclic(key):
        raise FlavorError("cyclic oriented graph in an acyclic sum; project with `project_acyclic`")


class GraphSum:
    """Finite rational combination of isoclasses of one flavor."""

    __slots__ = ("terms", "flavor")

    def __init__(self, terms: dict | None = None, flavor: str = SIMPLE):
        if flavor not in FLAVORS:
            raise FlavorError(f"unknown flavor {flavor!r}")
        clean = {}
        for k, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                _check_key(k, flavor)
                clean[k] = c
        self.terms = clean
        self.flavor = flavor

    @classmethod
    def of(cls, g, coeff=1, flavor: str | None = None) -> "GraphSum":
        flavor = flavor or _flavor_of_graph(g)
        return cls({canonical_key(g): Fraction(coeff)}, flavor)

    @classmethod
    def one(cls, flavor: str = SIMPLE) -> "GraphSum":
        return cls({empty_key(flavor): Fraction(1)}, flavor)

    @classmethod
    def zero(cls, flavor: str = SIMPLE) -> "GraphSum":
        return cls({}, flavor)

    def coefficient(self, g) -> Fraction:
        k = g if isinstance(g, bytes) else canonical_key(g)
        return self.terms.get(k, Fraction(0))

    def graphs(self) -> list:
        """``[(representative, coefficient)]`` sorted by key."""
        return [(graph_from_key(k), c) for k, c in sorted(self.terms.items())]

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other: "GraphSum") -> None:
        if not isinstance(other, GraphSum):
            raise TypeError(f"expected GraphSum, got {type(other).__name__}")
        if other.flavor != self.flavor:
            raise FlavorError(f"flavor mismatch: {self.flavor} vs {other.flavor}")

    def __add__(self, other: "GraphSum") -> "GraphSum":
        self._same(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return GraphSum(t, self.flavor)

    def __neg__(self) -> "GraphSum":
        return GraphSum({k: -c for k, c in self.terms.items()}, self.flavor)

    def __sub__(self, other: "GraphSum") -> "GraphSum":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GraphSum):
            return product(self, other)
        s = Fraction(other)
        return GraphSum({k: c * s for k, c in self.terms.items()}, self.flavor)

    def __rmul__(self, other) -> "GraphSum":
        s = Fraction(other)
        return GraphSum({k: c * s for k, c in self.terms.items()}, self.flavor)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self.flavor == other.flavor and self.terms == other.terms

    def __repr__(self) -> str:
        from .graphs import render

        parts = [f"{c}*[{render(graph_from_key(k))}]" for k, c in sorted(self.terms.items())]
        return f"GraphSum<{self.flavor}>(" + " + ".join(parts) + ")"


class TensorSum:
    """Rational combination of ``arity``-fold tensors of isoclasses."""

    __slots__ = ("terms", "flavor", "arity")

    def __init__(self, terms: dict | None = None, flavor: str = SIMPLE, arity: int = 2):
        clean = {}
        for ks, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(ks) != arity:
                    raise ValueError(f"tensor of length {len(ks)} in an arity-{arity} sum")
                clean[tuple(ks)] = c
        self.terms = clean
        self.flavor = flavor
        self.arity = arity

    def graphs(self) -> list:
        return [(tuple(graph_from_key(k) for k in ks), c) for ks, c in sorted(self.terms.items())]

    def is_zero(self) -> bool:
        return not self.terms

    def _same(self, other: "TensorSum") -> None:
        if other.flavor != self.flavor or other.arity != self.arity:
            raise FlavorError("tensor flavor or arity mismatch")

    def __add__(self, other: "TensorSum") -> "TensorSum":
        self._same(other)
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return TensorSum(t, self.flavor, self.arity)

    def __neg__(self) -> "TensorSum":
        return TensorSum({k: -c for k, c in self.terms.items()}, self.flavor, self.arity)

    def __sub__(self, other: "TensorSum") -> "TensorSum":
        return self + (-other)

    def __rmul__(self, s) -> "TensorSum":
        s = Fraction(s)
        return TensorSum({k: c * s for k, c in self.terms.items()}, self.flavor, self.arity)

    __mul__ = __rmul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSum):
            return NotImplemented
        return (self.flavor, self.arity, self.terms) == (other.flavor, other.arity, other.terms)

    def swap(self) -> "TensorSum":
        if self.arity != 2:
            raise ValueError("swap needs arity 2")
        return TensorSum({(b, a): c for (a, b), c in self.terms.items()}, self.flavor, 2)

    def __repr__(self) -> str:
        from .graphs import render

        parts = [
            f"{c}*" + "⊗".join(f"[{render(graph_from_key(k))}]" for k in ks)
            for ks, c in sorted(self.terms.items())
        ]
        return f"TensorSum<{self.flavor},{self.arity}>(" + " + ".join(parts) + ")"


def tensor(*sums: GraphSum) -> TensorSum:
    """Tensor product of graph sums."""
    flavor = sums[0].flavor
    terms: dict = {(): Fraction(1)}
    for s in sums:
        if s.flavor != flavor:
            raise FlavorError("flavor mismatch in tensor")
        new: dict = {}
        for ks, c in terms.items():
            for k, d in s.terms.items():
                new[ks + (k,)] = new.get(ks + (k,), 0) + c * d
        terms = new
    return TensorSum(terms, flavor, len(sums))


def _accumulate(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _as_sum(x, flavor: str | None = None) -> GraphSum:
    if isinstance(x, GraphSum):
        return x
    if isinstance(x, bytes):
        return GraphSum({x: 1}, flavor or (SIMPLE if x[0] == KIND_SIMPLE else ORIENTED))
    return GraphSum.of(x, flavor=flavor)


# ---------------------------------------------------------------------------
# product


@lru_cache(maxsize=1 << 18)
def _mul_keys(a: bytes, b: bytes) -> bytes:
    return canonical_key(disjoint_union(graph_from_key(a), graph_from_key(b)))


def product(a: GraphSum, b: GraphSum) -> GraphSum:
    """Bilinear extension of disjoint union; the empty graph is the unit."""
    a, b = _as_sum(a), _as_sum(b)
    a._same(b)
    acc: dict = {}
    for k1, c1 in a.terms.items():
        for k2, c2 in b.terms.items():
            _accumulate(acc, _mul_keys(k1, k2), c1 * c2)
    return GraphSum(acc, a.flavor)


def project_acyclic(a: GraphSum) -> GraphSum:
    """The projection ``pi``: drop oriented graphs containing an oriented cycle."""
    if a.flavor == SIMPLE:
        raise FlavorError("projection applies to oriented sums")
    return GraphSum({k: c for k, c in a.terms.items() if key_is_acyclic(k)}, ACYCLIC)


# ---------------------------------------------------------------------------
# coproducts on basis keys


@lru_cache(maxsize=None)
def _bipartition_terms(key: bytes) -> tuple:
    g = graph_from_key(key)
    full = (1 << g.n) - 1
    acc: dict = {}
    for mask in range(full + 1):
        pair = (canonical_key(induced_mask(g, mask)), canonical_key(induced_mask(g, full & ~mask)))
        acc[pair] = acc.get(pair, 0) + 1
    return tuple(acc.items())


def ideal_masks(g: OrientedGraph) -> list:
    """Vertex sets closed under following arcs."""
    out = g.out_adj
    res = []
    for mask in range(1 << g.n):
        closed = True
        m = mask
        while m:
            low = m & -m
            if out[low.bit_length() - 1] & ~mask:
                closed = False
                break
            m ^= low
        if closed:
            res.append(mask)
    return res


@lru_cache(maxsize=None)
def _ideal_terms(key: bytes) -> tuple:
    g = graph_from_key(key)
    full = (1 << g.n) - 1
    acc: dict = {}
    for mask in ideal_masks(g):
        pair = (canonical_key(induced_mask(g, mask)), canonical_key(induced_mask(g, full & ~mask)))
        acc[pair] = acc.get(pair, 0) + 1
    return tuple(acc.items())


@lru_cache(maxsize=None)
def _contraction_terms(key: bytes) -> tuple:
    g = graph_from_key(key)
    acc: dict = {}
    for masks in connected_partition_masks(g):
        p = SetPartition.from_masks(g.n, masks)
        pair = (canonical_key(contract(g, p)), canonical_key(restrict(g, p)))
        acc[pair] = acc.get(pair, 0) + 1
    return tuple(acc.items())


def _Delta_key_terms(key: bytes, flavor: str) -> tuple:
    if flavor == SIMPLE:
        return _bipartition_terms(key)
    terms = _ideal_terms(key)
    if flavor == ACYCLIC:
        return tuple((p, c) for p, c in terms if key_is_acyclic(p[0]) and key_is_acyclic(p[1]))
    return terms


def _delta_key_terms(key: bytes, flavor: str) -> tuple:
    terms = _contraction_terms(key)
    if flavor == ACYCLIC:
        return tuple((p, c) for p, c in terms if key_is_acyclic(p[0]) and key_is_acyclic(p[1]))
    return terms


def _extend(a: GraphSum, key_terms: Callable) -> TensorSum:
    acc: dict = {}
    for k, c in a.terms.items():
        for pair, m in key_terms(k, a.flavor):
            _accumulate(acc, pair, c * m)
    return TensorSum(acc, a.flavor, 2)


def coproduct_bipartition(x) -> TensorSum:
    """``Delta(G) = sum over I subset V of G|_I ⊗ G|_(V minus I)`` (simple flavor)."""
    a = _as_sum(x)
    if a.flavor != SIMPLE:
        raise FlavorError("the bipartition coproduct is for simple graphs; use coproduct_ideal")
    return _extend(a, _Delta_key_terms)


def coproduct_ideal(x) -> TensorSum:
    """``Delta(G) = sum over ideals I of G|_I ⊗ G|_(V minus I)`` (oriented flavors)."""
    a = _as_sum(x)
    if a.flavor == SIMPLE:
        raise FlavorError("the ideal coproduct is for oriented graphs")
    return _extend(a, _Delta_key_terms)


def coproduct_Delta(x) -> TensorSum:
    """First coproduct, dispatched on flavor."""
    return _extend(_as_sum(x), _Delta_key_terms)


def coproduct_contraction(x) -> TensorSum:
    """``delta(G) = sum over ~ in E_c(G) of G/~ ⊗ G|~``."""
    return _extend(_as_sum(x), _delta_key_terms)


coproduct_delta = coproduct_contraction


def apply_factor(t: TensorSum, i: int, fn: Callable[[bytes], TensorSum]) -> TensorSum:
    """Replace factor ``i`` of each tensor by the tensor ``fn(factor)``."""
    acc: dict = {}
    arity = None
    for ks, c in t.terms.items():
        sub = fn(ks[i])
        arity = t.arity - 1 + sub.arity
        for sks, d in sub.terms.items():
            _accumulate(acc, ks[:i] + sks + ks[i + 1 :], c * d)
    if arity is None:
        arity = t.arity + 1
    return TensorSum(acc, t.flavor, arity)


def Delta_on_factor(t: TensorSum, i: int) -> TensorSum:
    return apply_factor(t, i, lambda k: coproduct_Delta(GraphSum({k: 1}, t.flavor)))


def delta_on_factor(t: TensorSum, i: int) -> TensorSum:
    return apply_factor(t, i, lambda k: coproduct_contraction(GraphSum({k: 1}, t.flavor)))


def m_1_3_24(t: TensorSum) -> TensorSum:
    """``a⊗b⊗c⊗d -> a⊗c⊗bd``."""
    if t.arity != 4:
        raise ValueError("m_1_3_24 needs arity 4")
    acc: dict = {}
    for (a, b, c, d), coef in t.terms.items():
        _accumulate(acc, (a, c, _mul_keys(b, d)), coef)
    return TensorSum(acc, t.flavor, 3)


def delta_tensor_delta(t: TensorSum) -> TensorSum:
    """``(delta ⊗ delta)`` on a 2-tensor, giving a 4-tensor."""
    return delta_on_factor(delta_on_factor(t, 1), 0)


# ---------------------------------------------------------------------------
# counits, reduced coproduct, antipode


def counit_Delta(x) -> Fraction:
    a = _as_sum(x)
    return a.terms.get(empty_key(a.flavor), Fraction(0))


@lru_cache(maxsize=None)
def _no_edges(key: bytes) -> bool:
    # every pair code byte is zero
    return not any(key[2:])


def counit_delta(x) -> Fraction:
    """Sum of coefficients of edgeless (arcless) graphs."""
    a = _as_sum(x)
    return sum((c for k, c in a.terms.items() if _no_edges(k)), Fraction(0))


def reduced_coproduct(x) -> TensorSum:
    a = _as_sum(x)
    if counit_Delta(a):
        raise ValueError("reduced coproduct needs zero empty-graph coefficient")
    one = empty_key(a.flavor)
    acc = dict(coproduct_Delta(a).terms)
    for k, c in a.terms.items():
        _accumulate(acc, (k, one), -c)
        _accumulate(acc, (one, k), -c)
    return TensorSum(acc, a.flavor, 2)


@lru_cache(maxsize=None)
def _iterated_key(key: bytes, flavor: str, k: int) -> TensorSum:
    if k == 0:
        return TensorSum({(key,): 1}, flavor, 1)
    first = reduced_coproduct(GraphSum({key: 1}, flavor))
    return apply_factor(first, 0, lambda kk: _iterated_key(kk, flavor, k - 1))


def iterated_reduced_coproduct(x, k: int) -> TensorSum:
    """``Delta~^(k)``, defined by ``(Delta~^(k-1) ⊗ Id) ∘ Delta~``; arity ``k + 1``."""
    a = _as_sum(x)
    if counit_Delta(a):
        raise ValueError("reduced coproduct needs zero empty-graph coefficient")
    acc: dict = {}
    for key, c in a.terms.items():
        for ks, d in _iterated_key(key, a.flavor, k).terms.items():
            _accumulate(acc, ks, c * d)
    return TensorSum(acc, a.flavor, k + 1)


@lru_cache(maxsize=None)
def _antipode_key(key: bytes, flavor: str) -> GraphSum:
    one = empty_key(flavor)
    if key == one:
        return GraphSum.one(flavor)
    out = -GraphSum({key: 1}, flavor)
    for (k1, k2), c in _Delta_key_terms(key, flavor):
        if k1 == one or k2 == one:
            continue
        out = out - c * product(_antipode_key(k1, flavor), GraphSum({k2: 1}, flavor))
    return out


def antipode_recursive(x) -> GraphSum:
    """Antipode from ``S(G) = -G - sum S(G') G''`` over the reduced coproduct."""
    a = _as_sum(x)
    out = GraphSum.zero(a.flavor)
    for k, c in a.terms.items():
        out = out + c * _antipode_key(k, a.flavor)
    return out


def theorem_antipode(x) -> GraphSum:
    """``S = (eps_delta^{*-1} ⊗ Id) ∘ delta`` with ``eps_delta^{*-1}(H) = chromatic(H)(-1)``."""
    from .invariants import chromatic_polynomial

    a = _as_sum(x)
    if a.flavor != SIMPLE:
        raise FlavorError("the chromatic form of the antipode is for simple graphs")
    acc: dict = {}
    for (k1, k2), c in coproduct_contraction(a).terms.items():
        _accumulate(acc, k2, c * chromatic_polynomial(graph_from_key(k1))(-1))
    return GraphSum(acc, SIMPLE)


# ---------------------------------------------------------------------------
# characters


def split_components(key: bytes) -> list:
    """Keys of the connected components (weak components for oriented graphs)."""
    g = graph_from_key(key)
    return [canonical_key(induced_mask(g, m)) for m in g.component_masks]


class Character:
    """A multiplicative map from basis graphs of one flavor to rationals.

    ``rule`` receives the canonical representative graph.  With
    ``extend=True`` the rule is only called on connected graphs and extended
    multiplicatively, which is how every composite character is evaluated.
    Values are memoized by canonical key; concurrent readers may share the
    cache.
    """

    def __init__(self, rule: Callable, flavor: str = SIMPLE, name: str = "", extend: bool = False):
        if flavor not in FLAVORS:
            raise FlavorError(f"unknown flavor {flavor!r}")
        self.rule = rule
        self.flavor = flavor
        self.name = name or getattr(rule, "__name__", "character")
        self.extend = extend
        self._memo: dict = {}
        self._lock = threading.Lock()

    def value(self, key: bytes) -> Fraction:
        v = self._memo.get(key)
        if v is not None:
            return v
        if key == empty_key(self.flavor):
            v = Fraction(1)
        else:
            comps = split_components(key) if self.extend else [key]
            if len(comps) > 1:
                v = Fraction(1)
                for k in comps:
                    v *= self.value(k)
            else:
                v = Fraction(self.rule(graph_from_key(key)))
        with self._lock:
            self._memo.setdefault(key, v)
        return v

    def __call__(self, x) -> Fraction:
        if isinstance(x, GraphSum):
            return sum((c * self.value(k) for k, c in x.terms.items()), Fraction(0))
        if isinstance(x, bytes):
            return self.value(x)
        return self.value(canonical_key(x))

    def __repr__(self) -> str:
        return f"Character({self.name}, {self.flavor})"


def evaluate_tensor(chars: Iterable[Character], t: TensorSum) -> Fraction:
    """``(chi_1 ⊗ ... ⊗ chi_k)(t)``."""
    chars = list(chars)
    if len(chars) != t.arity:
        raise ValueError("one character per tensor factor expected")
    total = Fraction(0)
    for ks, c in t.terms.items():
        v = c
        for ch, k in zip(chars, ks):
            v *= ch.value(k)
            if not v:
                break
        total += v
    return total


def _same_flavor(*chars: Character) -> str:
    flavors = {c.flavor for c in chars}
    if len(flavors) != 1:
        raise FlavorError(f"characters of different flavors: {sorted(flavors)}")
    return flavors.pop()


def convolve_Delta(lam: Character, mu: Character) -> Character:
    """``lam * mu = (lam ⊗ mu) ∘ Delta``."""
    flavor = _same_flavor(lam, mu)

    def rule(g):
        k = canonical_key(g)
        return sum((c * lam.value(a) * mu.value(b) for (a, b), c in _Delta_key_terms(k, flavor)), Fraction(0))

    return Character(rule, flavor, f"({lam.name} * {mu.name})", extend=True)


def convolve_delta(lam: Character, mu: Character) -> Character:
    """``lam ⋆ mu = (lam ⊗ mu) ∘ delta``."""
    flavor = _same_flavor(lam, mu)

    def rule(g):
        k = canonical_key(g)
        return sum((c * lam.value(a) * mu.value(b) for (a, b), c in _delta_key_terms(k, flavor)), Fraction(0))

    return Character(rule, flavor, f"({lam.name} ⋆ {mu.name})", extend=True)


def char_inverse_Delta(lam: Character, method: str = "auto") -> Character:
    """Inverse for ``*``.

    ``antipode`` evaluates ``lam ∘ S``; ``recursive`` solves
    ``(lam * nu)(G) = 0`` for ``nu(G)`` using the ``I = ∅`` term.  ``auto``
    picks the antipode route on simple graphs.
    """
    flavor = lam.flavor
    if method == "auto":
        method = "antipode" if flavor == SIMPLE else "recursive"
    if method == "antipode":
        if flavor != SIMPLE:
            raise FlavorError("antipode route implemented for simple graphs")

        def rule(g):
            return lam(antipode_recursive(GraphSum.of(g)))

        return Character(rule, flavor, f"{lam.name}^(*-1)", extend=True)
    if method != "recursive":
        raise ValueError(f"unknown method {method!r}")
    one = empty_key(flavor)
    holder: list = []

    def rule(g):
        k = canonical_key(g)
        nu = holder[0]
        total = Fraction(0)
        for (a, b), c in _Delta_key_terms(k, flavor):
            if a == one:
                continue
            total += c * lam.value(a) * nu.value(b)
        return -total / lam.value(one)

    nu = Character(rule, flavor, f"{lam.name}^(*-1)", extend=True)
    holder.append(nu)
    return nu


def char_inverse_delta(lam: Character) -> Character:
    """Inverse for ``⋆``; exists iff ``lam(•) != 0``.

    For connected ``G`` the one-block partition contributes ``lam(•) nu(G)``
    and every other partition restricts to a graph with fewer edges, so
    ``nu(G)`` is solved for in order of increasing edge count.
    """
    flavor = lam.flavor
    dot = canonical_key(SimpleGraph(1) if flavor == SIMPLE else OrientedGraph(1))
    lam_dot = lam.value(dot)
    if not lam_dot:
        raise NotInvertibleError(f"{lam.name} vanishes on the single vertex; not ⋆-invertible")
    holder: list = []

    def rule(g):
        k = canonical_key(g)
        nu = holder[0]
        total = Fraction(1) if _no_edges(k) else Fraction(0)
        for (a, b), c in _delta_key_terms(k, flavor):
            if a == dot:
                continue
            total -= c * lam.value(a) * nu.value(b)
        return total / lam_dot

    nu = Character(rule, flavor, f"{lam.name}^(⋆-1)", extend=True)
    holder.append(nu)
    return nu


# ---------------------------------------------------------------------------
# morphisms to K[X]


class PolyMorphism:
    """A multiplicative map from basis graphs to :class:`UniPoly`, memoized by key."""

    def __init__(self, rule: Callable, flavor: str = SIMPLE, name: str = ""):
        self.rule = rule
        self.flavor = flavor
        self.name = name or getattr(rule, "__name__", "morphism")
        self._memo: dict = {}
        self._lock = threading.Lock()

    def value(self, key: bytes) -> UniPoly:
        v = self._memo.get(key)
        if v is None:
            v = UniPoly.const(1) if key == empty_key(self.flavor) else self.rule(graph_from_key(key))
            with self._lock:
                self._memo.setdefault(key, v)
        return v

    def __call__(self, x) -> UniPoly:
        if isinstance(x, GraphSum):
            out = UniPoly()
            for k, c in x.terms.items():
                out = out + self.value(k) * c
            return out
        if isinstance(x, bytes):
            return self.value(x)
        return self.value(canonical_key(x))

    def __repr__(self) -> str:
        return f"PolyMorphism({self.name})"


def act(phi: PolyMorphism, lam: Character) -> PolyMorphism:
    """``phi ↜ lam = (phi ⊗ lam) ∘ delta``."""
    if phi.flavor != lam.flavor:
        raise FlavorError("morphism and character flavors differ")
    flavor = phi.flavor

    def rule(g):
        out = UniPoly()
        for (a, b), c in _delta_key_terms(canonical_key(g), flavor):
            w = c * lam.value(b)
            if w:
                out = out + phi.value(a) * w
        return out

    return PolyMorphism(rule, flavor, f"({phi.name} ↜ {lam.name})")


def phi_lambda(lam: Character, g) -> UniPoly:
    """``sum_n lam^{⊗n}(Delta~^(n-1)(G)) X(X-1)...(X-n+1)/n!``, truncated at ``n = |V|``."""
    a = _as_sum(g, lam.flavor if lam.flavor != ACYCLIC else None)
    out = UniPoly()
    one = empty_key(a.flavor)
    for key, c in a.terms.items():
        if key == one:
            out = out + UniPoly.const(c)
            continue
        n = key[1]
        for k in range(1, n + 1):
            coef = evaluate_tensor([lam] * k, _iterated_key(key, a.flavor, k - 1))
            if coef:
                out = out + UniPoly.falling_factorial(k) * (c * coef / factorial(k))
    return out


def phi_lambda_morphism(lam: Character) -> PolyMorphism:
    return PolyMorphism(lambda g: phi_lambda(lam, g), lam.flavor, f"phi[{lam.name}]")


# ---------------------------------------------------------------------------
# orientations as a morphism


def theta(g: SimpleGraph) -> GraphSum:
    """Sum of all ``2^|E|`` orientations, merged by isoclass."""
    acc: dict = {}
    for arcs in orientation_arcs(g):
        _accumulate(acc, canonical_key(OrientedGraph(g.n, arcs)), 1)
    return GraphSum(acc, ORIENTED)


def theta_ac(g: SimpleGraph) -> GraphSum:
    """Sum of the acyclic orientations: ``pi ∘ Theta``."""
    return project_acyclic(theta(g))


def theta_map(x, acyclic: bool = False) -> GraphSum:
    """Linear extension of ``Theta`` (or ``Theta_ac``) to simple graph sums."""
    a = _as_sum(x)
    if a.flavor != SIMPLE:
        raise FlavorError("Theta is defined on simple graphs")
    out = GraphSum.zero(ACYCLIC if acyclic else ORIENTED)
    for k, c in a.terms.items():
        g = graph_from_key(k)
        out = out + c * (theta_ac(g) if acyclic else theta(g))
    return out


def theta_tensor(t: TensorSum, acyclic: bool = False) -> TensorSum:
    """``Theta ⊗ ... ⊗ Theta``."""
    acc: dict = {}
    flavor = ACYCLIC if acyclic else ORIENTED
    for ks, c in t.terms.items():
        parts = [theta_map(GraphSum({k: 1}, SIMPLE), acyclic) for k in ks]
        for sks, d in tensor(*parts).terms.items():
            _accumulate(acc, sks, c * d)
    return TensorSum(acc, flavor, t.arity)


def project_tensor(t: TensorSum) -> TensorSum:
    """``pi ⊗ ... ⊗ pi``."""
    terms = {ks: c for ks, c in t.terms.items() if all(key_is_acyclic(k) for k in ks)}
    return TensorSum(terms, ACYCLIC, t.arity)


def as_key(g) -> bytes:
    return g if isinstance(g, bytes) else canonical_key(g)


def vertex_subsets(n: int):
    for mask in range(1 << n):
        yield _bits(mask)


GraphLike = Union[SimpleGraph, OrientedGraph, GraphSum, bytes]
