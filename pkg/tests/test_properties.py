"""Randomized properties: relabeling invariance and multiplicativity."""

from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from graphbialg import characters as chars
from graphbialg.checks import check_chromatic_multiplicative
from graphbialg.graphs import SimpleGraph, canonical_key, disjoint_union, relabel
from graphbialg.hopf import antipode_recursive, coproduct_Delta, coproduct_contraction, GraphSum
from graphbialg.invariants import (
    chromatic_polynomial,
    fk_polynomial,
    lambda_character,
    mu_character,
    tutte_polynomial,
)


@st.composite
def graphs(draw, max_n: int = 6):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph(n, chosen)


@st.composite
def relabeled(draw):
    g = draw(graphs())
    perm = draw(st.permutations(list(range(g.n))))
    return g, relabel(g, perm)


@settings(max_examples=60, deadline=None)
@given(relabeled())
def test_invariants_ignore_labels(pair):
    g, h = pair
    assert canonical_key(g) == canonical_key(h)
    assert tutte_polynomial(g) == tutte_polynomial(h)
    assert coproduct_contraction(GraphSum.of(g)) == coproduct_contraction(GraphSum.of(h))


BUILTINS = [
    chars.mu_0(),
    chars.mu_1(),
    chars.alpha(),
    mu_character(Fraction(-3, 2)),
    lambda_character(Fraction(2, 5)),
    chars.chromatic_at(3),
    chars.counting_at(-1, 2),
]


# 50 random disjoint-union pairs
@settings(max_examples=50, deadline=None)
@given(graphs(4), graphs(4))
def test_characters_multiplicative(g, h):
    u = disjoint_union(g, h)
    for ch in BUILTINS:
        assert ch(u) == ch(g) * ch(h)
    assert check_chromatic_multiplicative(g, h)
    assert fk_polynomial(u) == fk_polynomial(g) * fk_polynomial(h)


@settings(max_examples=30, deadline=None)
@given(graphs(4), graphs(3))
def test_coproducts_are_algebra_maps(g, h):
    a, b = GraphSum.of(g), GraphSum.of(h)
    ab = GraphSum.of(disjoint_union(g, h))
    from graphbialg.hopf import product

    for cop in (coproduct_Delta, coproduct_contraction):
        left = cop(ab)
        ta, tb = cop(a), cop(b)
        right = {}
        for (a1, a2), c in ta.terms.items():
            for (b1, b2), d in tb.terms.items():
                k1 = next(iter(product(GraphSum({a1: 1}), GraphSum({b1: 1})).terms))
                k2 = next(iter(product(GraphSum({a2: 1}), GraphSum({b2: 1})).terms))
                right[(k1, k2)] = right.get((k1, k2), 0) + c * d
        assert left.terms == {k: v for k, v in right.items() if v}


@settings(max_examples=30, deadline=None)
@given(graphs(4), graphs(3))
def test_antipode_multiplicative(g, h):
    from graphbialg.hopf import product

    assert antipode_recursive(disjoint_union(g, h)) == product(antipode_recursive(g), antipode_recursive(h))


@settings(max_examples=40, deadline=None)
@given(graphs(5))
def test_chromatic_degree_and_leading(g):
    p = chromatic_polynomial(g)
    assert p.degree == g.n and p[g.n] == 1
    if g.num_edges:
        assert p[g.n - 1] == -g.num_edges
