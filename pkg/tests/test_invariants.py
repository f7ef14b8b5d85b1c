from __future__ import annotations

from itertools import product

from graphbialg.graphs import (
    Multigraph,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    path_graph,
    simple_isoclasses_upto,
)
from graphbialg.colorings import proper_coloring_count
from graphbialg.invariants import (
    add_coproduct_eval,
    chromatic_polynomial,
    fk_from_tutte,
    fk_polynomial,
    rank_generating_polynomial,
    tutte_deletion_contraction_oracle,
    tutte_from_fk,
    tutte_polynomial,
    zeta,
)
from graphbialg.poly import BiPoly, UniPoly

X, Y = BiPoly.x(), BiPoly.y()
x = UniPoly.x()
K2, K3 = complete_graph(2), complete_graph(3)


def test_chromatic_examples():
    assert chromatic_polynomial(edgeless_graph(3)) == x**3
    assert chromatic_polynomial(K2) == x**2 - x
    assert chromatic_polynomial(K3) == x * (x - 1) * (x - 2)
    assert chromatic_polynomial(cycle_graph(4)) == (x - 1) ** 4 + (x - 1)


def test_chromatic_vs_brute_force():
    for g in simple_isoclasses_upto(5):
        p = chromatic_polynomial(g)
        assert p.degree == g.n
        for q in range(4):
            assert p(q) == proper_coloring_count(g, q)


def test_fk_examples():
    assert fk_polynomial(edgeless_graph(1)) == X
    assert fk_polynomial(K2) == X**2 + X * Y
    assert fk_polynomial(K3) == X**3 + 3 * X**2 * Y + 3 * X * Y**2 + X * Y**3


def test_fk_degrees():
    for g in simple_isoclasses_upto(5):
        z = fk_polynomial(g)
        assert z.x_degree == g.n
        assert min(dx for dx, _ in z.coeffs) == g.cc


def test_tutte_examples():
    assert tutte_polynomial(K2) == X
    assert tutte_polynomial(K3) == X**2 + X + Y
    assert tutte_polynomial(edgeless_graph(4)) == BiPoly.const(1)
    # K4: standard table value
    assert tutte_polynomial(complete_graph(4)) == (
        X**3 + 3 * X**2 + 2 * X + 4 * X * Y + 2 * Y + 3 * Y**2 + Y**3
    )


def test_tutte_nonnegative_integer_coefficients():
    for g in simple_isoclasses_upto(5):
        for c in tutte_polynomial(g).coeffs.values():
            assert c > 0 and c.denominator == 1


def test_oracle_on_multigraphs():
    assert tutte_deletion_contraction_oracle(Multigraph(1, ((0, 0),))) == Y
    assert tutte_deletion_contraction_oracle(Multigraph(2, ((0, 1),))) == X
    assert tutte_deletion_contraction_oracle(Multigraph(2, ((0, 1), (0, 1)))) == X + Y
    assert tutte_deletion_contraction_oracle(K3) == X**2 + X + Y


def test_rank_generating():
    s = rank_generating_polynomial(K3)
    assert s == X**2 + 3 * X + 3 + Y
    assert s.shift(-1, -1) == tutte_polynomial(K3)


def test_conversions():
    assert fk_from_tutte(X, 2, 1) == X**2 + X * Y
    assert fk_from_tutte(BiPoly.const(1), 3, 3) == X**3
    for g in simple_isoclasses_upto(5):
        assert fk_from_tutte(tutte_polynomial(g), g.n, g.cc) == fk_polynomial(g)
        assert tutte_from_fk(fk_polynomial(g), g.n, g.cc) == tutte_polynomial(g)


def test_zeta_examples():
    assert zeta(K3, -1) == x * (x - 1) * (x - 2)
    assert zeta(K3, 0) == x**3
    assert zeta(K2, 1) == x**2 + x


def test_add_coproduct_eval():
    assert add_coproduct_eval(x) == X + Y
    assert add_coproduct_eval(x**2) == X**2 + 2 * X * Y + Y**2
    assert add_coproduct_eval(chromatic_polynomial(K2)) == (X + Y) * (X + Y - 1)


def test_zeta_is_fk_at_every_point():
    g = path_graph(4)
    z = fk_polynomial(g)
    for a, b in product(range(-2, 3), repeat=2):
        assert zeta(g, b)(a) == z(a, b)
