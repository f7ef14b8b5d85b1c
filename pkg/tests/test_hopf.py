from __future__ import annotations

from fractions import Fraction

import pytest

from graphbialg import characters as chars
from graphbialg.graphs import (
    OrientedGraph,
    SimpleGraph,
    complete_graph,
    disjoint_union,
    edgeless_graph,
    path_graph,
    simple_isoclasses_upto,
)
from graphbialg.hopf import (
    Character,
    ORIENTED,
    SIMPLE,
    FlavorError,
    GraphSum,
    TensorSum,
    act,
    antipode_recursive,
    char_inverse_Delta,
    char_inverse_delta,
    convolve_Delta,
    convolve_delta,
    coproduct_Delta,
    coproduct_contraction,
    coproduct_ideal,
    counit_Delta,
    counit_delta,
    iterated_reduced_coproduct,
    phi_lambda,
    product,
    reduced_coproduct,
    tensor,
    theorem_antipode,
    theta,
    theta_ac,
)
from graphbialg.invariants import PHI0, PHI_CHR, lambda_character, mu_character
from graphbialg.poly import UniPoly

EMPTY = edgeless_graph(0)
DOT = edgeless_graph(1)
K2, K3, P3 = complete_graph(2), complete_graph(3), path_graph(3)
X = UniPoly.x()


def S(*pairs, flavor=SIMPLE) -> GraphSum:
    out = GraphSum.zero(flavor)
    for c, g in pairs:
        out = out + GraphSum.of(g, c)
    return out


def T(*triples, flavor=SIMPLE) -> TensorSum:
    out = TensorSum({}, flavor, 2)
    for c, a, b in triples:
        out = out + c * tensor(GraphSum.of(a), GraphSum.of(b))
    return out


def E(n: int) -> SimpleGraph:
    return edgeless_graph(n)


def K2_dot() -> SimpleGraph:
    return disjoint_union(K2, DOT)


def test_product_examples():
    assert product(S((1, DOT)), S((1, DOT))) == S((1, E(2)))
    assert product(S((2, K2)), S((3, DOT))) == S((6, K2_dot()))
    assert product(GraphSum.one(), S((1, K3))) == S((1, K3))


def test_flavor_mismatch():
    with pytest.raises(FlavorError):
        S((1, DOT)) + S((1, OrientedGraph(1, [])), flavor=ORIENTED)


def test_Delta_examples():
    assert coproduct_Delta(S((1, DOT))) == T((1, DOT, EMPTY), (1, EMPTY, DOT))
    assert coproduct_Delta(S((1, K2))) == T((1, K2, EMPTY), (1, EMPTY, K2), (2, DOT, DOT))
    assert coproduct_Delta(S((1, K3))) == T((1, K3, EMPTY), (1, EMPTY, K3), (3, DOT, K2), (3, K2, DOT))


def test_ideal_examples():
    arc = OrientedGraph(2, [(0, 1)])
    d = OrientedGraph(1, [])
    e = OrientedGraph(0, [])
    want = T((1, arc, e), (1, d, d), (1, e, arc), flavor=ORIENTED)
    assert coproduct_ideal(S((1, arc), flavor=ORIENTED)) == want
    two_cycle = OrientedGraph(2, [(0, 1), (1, 0)])
    assert coproduct_ideal(S((1, two_cycle), flavor=ORIENTED)) == T(
        (1, two_cycle, e), (1, e, two_cycle), flavor=ORIENTED
    )
    assert len(coproduct_ideal(S((1, OrientedGraph(3, [])), flavor=ORIENTED)).terms) == 4  # 8 ideals, merged


def test_delta_examples():
    assert coproduct_contraction(S((1, K2))) == T((1, K2, E(2)), (1, DOT, K2))
    assert coproduct_contraction(S((1, K3))) == T((1, K3, E(3)), (1, DOT, K3), (3, K2, K2_dot()))
    # the one-block partition contributes the vertex term
    assert coproduct_contraction(S((1, P3))) == T((1, P3, E(3)), (1, DOT, P3), (2, K2, K2_dot()))
    assert coproduct_contraction(S((1, E(3)))) == T((1, E(3), E(3)))


def test_counits():
    assert counit_Delta(GraphSum.one()) == 1 and counit_Delta(S((1, DOT))) == 0
    assert counit_delta(S((1, E(3)))) == 1
    assert counit_delta(S((1, K2), (2, E(2)))) == 2


def test_reduced_coproduct():
    assert reduced_coproduct(S((1, DOT))).is_zero()
    assert reduced_coproduct(S((1, K2))) == T((2, DOT, DOT))
    t = iterated_reduced_coproduct(S((1, K3)), 2)
    assert t.terms == {tuple(GraphSum.of(DOT).terms)[0:1] * 3: 6}


def test_antipode_examples():
    assert antipode_recursive(GraphSum.one()) == GraphSum.one()
    assert antipode_recursive(S((1, DOT))) == S((-1, DOT))
    assert antipode_recursive(S((1, K2))) == S((-1, K2), (2, E(2)))
    assert antipode_recursive(S((1, K3))) == S((-1, K3), (6, K2_dot()), (-6, E(3)))


def test_theorem_antipode_small():
    for g in simple_isoclasses_upto(4):
        assert theorem_antipode(g) == antipode_recursive(g)


def test_convolution_units():
    eps = chars.eps_Delta()
    lam = lambda_character(2)
    g = K3
    assert convolve_Delta(eps, lam)(g) == lam(g)
    assert convolve_delta(chars.eps_delta(), lam)(g) == lam(g)


def test_character_examples():
    assert convolve_delta(chars.mu_0(), lambda_character(-1))(K2) == 0
    arc = OrientedGraph(2, [(0, 1)])
    assert convolve_Delta(chars.mu_1_oriented(), chars.mu_sc())(arc) == 0
    assert char_inverse_Delta(chars.eps_Delta())(K3) == 0
    assert char_inverse_delta(chars.eps_delta())(E(3)) == 1
    for g in (K2, K3, P3):
        assert char_inverse_delta(chars.mu_0())(g) == lambda_character(-1)(g)
    lam = lambda_character(Fraction(1, 2))
    assert convolve_delta(lam, char_inverse_delta(lam))(K3) == 0


def test_inverse_methods_agree():
    lam = mu_character(Fraction(2, 3))
    a = char_inverse_Delta(lam, method="antipode")
    b = char_inverse_Delta(lam, method="recursive")
    for g in simple_isoclasses_upto(4):
        assert a(g) == b(g)


def test_character_values():
    assert chars.mu_1()(K3) == 8
    assert lambda_character(1)(K3) == 4
    assert lambda_character(0)(K3) == 0 and lambda_character(0)(E(3)) == 1


def test_action_examples():
    y = Fraction(3)
    assert act(PHI0, lambda_character(y))(K2) == X**2 + y * X
    assert act(PHI_CHR, mu_character(y))(K2) == X**2 + y * X
    assert act(PHI0, chars.eps_delta())(K3) == X**3


def test_phi_lambda_examples():
    assert phi_lambda(chars.eps_delta(), K2) == X * (X - 1)
    five = Character(lambda g: Fraction(5) ** g.n, SIMPLE, "5^n")
    assert phi_lambda(five, DOT) == 5 * X
    assert phi_lambda(lambda_character(5), DOT) == X
    # mu_1 is zeta_1's counit image, so phi_{mu_1}(K2) = Z_{K2}(X, 1)
    assert phi_lambda(chars.mu_1(), K2) == X**2 + X
    assert phi_lambda(chars.mu_0(), K2) == X**2


def test_theta_examples():
    arc = OrientedGraph(2, [(0, 1)])
    cyc = OrientedGraph(3, [(0, 1), (1, 2), (2, 0)])
    tra = OrientedGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert theta(K2) == S((2, arc), flavor=ORIENTED)
    assert theta(K3) == S((2, cyc), (6, tra), flavor=ORIENTED)
    ac = theta_ac(K3)
    assert ac.flavor != ORIENTED and list(ac.terms.values()) == [6]


def test_not_invertible():
    from graphbialg.hopf import NotInvertibleError

    with pytest.raises(NotInvertibleError):
        char_inverse_delta(chars.eps_Delta())(K2)
