"""Identity checks over exhaustive families of small graphs.

Each check is a predicate on one graph (simple or oriented) returning
``True`` on success.  Checks are grouped into suites; :func:`run_suite` runs
a suite over every isoclass within the bounds and produces a
:class:`RunReport` whose failures carry the graph6/digraph6 string of the
counterexample.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct
from typing import Callable

from . import characters as chars
from .colorings import (
    compatible_pair_count,
    compatible_pair_signed_sum,
    opc_signed_sum,
    proper_coloring_count,
    tutte_negative_check,
)
from .enumeration import (
    EnumerationCapError,
    MAX_PO_EDGES,
    PartialOrientationState,
    antipode_orientation_formula,
    covering_forests,
    covering_graphs,
    po_tac_states,
    spanning_forests,
    stanley_count,
    strongly_connected_orientations,
    unoriented_mask_counts,
)
from .formats import emit_any, parse_any
from .graphs import (
    OrientedGraph,
    SimpleGraph,
    canonical_key,
    connected_partitions,
    contract,
    induced_mask,
    oriented_isoclasses_upto,
    simple_isoclasses_upto,
)
from .hopf import (
    ORIENTED,
    SIMPLE,
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
    counit_Delta,
    counit_delta,
    Delta_on_factor,
    delta_on_factor,
    delta_tensor_delta,
    m_1_3_24,
    phi_lambda,
    product,
    project_acyclic,
    project_tensor,
    theorem_antipode,
    theta,
    theta_ac,
    theta_tensor,
)
from .invariants import (
    PHI0,
    PHI_CHR,
    add_coproduct_eval,
    chromatic_polynomial,
    fk_from_tutte,
    fk_polynomial,
    lambda_character,
    mu_character,
    phi0,
    tutte_deletion_contraction_oracle,
    tutte_from_fk,
    tutte_polynomial,
    zeta,
)
from .poly import BiPoly, UniPoly

FIXED_Y = tuple(Fraction(v) for v in (-2, -1, 0, 1, 2, 3))


def extra_y_values(k: int) -> list:
    """``k`` distinct non-integer rationals ``1/3, 4/3, 7/3, ...``."""
    return [Fraction(3 * i + 1, 3) for i in range(k)]


def morphism_y_values(g: SimpleGraph) -> list:
    """The fixed integers plus ``|E| + 1`` further rationals, enough to close the ``Y``-degree."""
    return list(FIXED_Y) + extra_y_values(g.num_edges + 1)


@lru_cache(maxsize=None)
def _lam(y: Fraction):
    return lambda_character(y)


@lru_cache(maxsize=None)
def _mu(y: Fraction):
    return mu_character(y)


@lru_cache(maxsize=None)
def _act_phi0(y: Fraction):
    return act(PHI0, _lam(y))


@lru_cache(maxsize=None)
def _act_chr(y: Fraction):
    return act(PHI_CHR, _mu(y))


@lru_cache(maxsize=None)
def _builtin(name: str):
    table = {
        "eps_Delta": lambda: chars.eps_Delta(SIMPLE),
        "eps_delta": lambda: chars.eps_delta(SIMPLE),
        "eps_Delta_o": lambda: chars.eps_Delta(ORIENTED),
        "eps_delta_o": lambda: chars.eps_delta(ORIENTED),
        "mu_0": chars.mu_0,
        "mu_1": chars.mu_1,
        "mu_1_o": chars.mu_1_oriented,
        "mu_sc": chars.mu_sc,
        "alpha": chars.alpha,
        "lambda_-1": lambda: _lam(Fraction(-1)),
        "lambda_1": lambda: _lam(Fraction(1)),
    }
    return table[name]()


@lru_cache(maxsize=None)
def _composite(name: str):
    if name == "mu_0_inv_delta":
        return char_inverse_delta(_builtin("mu_0"))
    if name == "mu_1_inv_Delta":
        return char_inverse_Delta(_builtin("mu_1"))
    if name == "mu_1_inv_Delta_rec":
        return char_inverse_Delta(_builtin("mu_1"), method="recursive")
    if name == "mu_1_conv_alpha":
        return convolve_Delta(_builtin("mu_1"), _builtin("alpha"))
    if name == "mu_1o_conv_sc":
        return convolve_Delta(_builtin("mu_1_o"), _builtin("mu_sc"))
    if name == "mu_1o_inv":
        return char_inverse_Delta(_builtin("mu_1_o"), method="recursive")
    raise KeyError(name)


@lru_cache(maxsize=None)
def _conv_delta(left: str, right: str, y: Fraction):
    table = {"mu_0": _builtin("mu_0"), "lambda_-1": _lam(Fraction(-1)), "lambda_y": _lam(y), "mu_y": _mu(y)}
    return convolve_delta(table[left], table[right])


@lru_cache(maxsize=None)
def _mu_inv(y: Fraction):
    return char_inverse_Delta(_mu(y))


def _flavor(g) -> str:
    return SIMPLE if isinstance(g, SimpleGraph) else ORIENTED


def _sum(g) -> GraphSum:
    return GraphSum.of(g)


def _counit_out(t: TensorSum, i: int, counit) -> GraphSum:
    """Apply a counit to factor ``i`` of a 2-tensor."""
    acc: dict = {}
    for ks, c in t.terms.items():
        v = counit(GraphSum({ks[i]: 1}, t.flavor))
        if v:
            k = ks[1 - i]
            acc[k] = acc.get(k, 0) + c * v
    return GraphSum(acc, t.flavor)


# ---------------------------------------------------------------------------
# double bialgebra axioms


def check_coassociativity_Delta(g) -> bool:
    d = coproduct_Delta(_sum(g))
    return Delta_on_factor(d, 0) == Delta_on_factor(d, 1)


def check_coassociativity_delta(g) -> bool:
    d = coproduct_contraction(_sum(g))
    return delta_on_factor(d, 0) == delta_on_factor(d, 1)


def check_cocommutativity_Delta(g) -> bool:
    d = coproduct_Delta(_sum(g))
    return d.swap() == d


def check_counits(g) -> bool:
    a = _sum(g)
    D, d = coproduct_Delta(a), coproduct_contraction(a)
    return (
        _counit_out(D, 0, counit_Delta) == a
        and _counit_out(D, 1, counit_Delta) == a
        and _counit_out(d, 0, counit_delta) == a
        and _counit_out(d, 1, counit_delta) == a
    )


def check_compatibility(g) -> bool:
    """``(Delta ⊗ Id) ∘ delta = m_{1,3,24} ∘ (delta ⊗ delta) ∘ Delta`` and the counit compatibility."""
    a = _sum(g)
    lhs = Delta_on_factor(coproduct_contraction(a), 0)
    rhs = m_1_3_24(delta_tensor_delta(coproduct_Delta(a)))
    if lhs != rhs:
        return False
    left_counit = _counit_out(coproduct_contraction(a), 0, counit_Delta)
    return left_counit == counit_Delta(a) * GraphSum.one(a.flavor)


def check_acyclic_quotient(g: OrientedGraph) -> bool:
    """``pi`` commutes with both coproducts."""
    a = _sum(g)
    pa = project_acyclic(a)
    return (
        coproduct_contraction(pa) == project_tensor(coproduct_contraction(a))
        and coproduct_Delta(pa) == project_tensor(coproduct_Delta(a))
    )


# ---------------------------------------------------------------------------
# antipode


def check_antipode_law(g) -> bool:
    a = _sum(g)
    target = counit_Delta(a) * GraphSum.one(a.flavor)
    left = GraphSum.zero(a.flavor)
    right = GraphSum.zero(a.flavor)
    for (k1, k2), c in coproduct_Delta(a).terms.items():
        g1, g2 = GraphSum({k1: 1}, a.flavor), GraphSum({k2: 1}, a.flavor)
        left = left + c * product(antipode_recursive(g1), g2)
        right = right + c * product(g1, antipode_recursive(g2))
    return left == target and right == target


def check_antipode_orientations(g: SimpleGraph) -> bool:
    return antipode_recursive(g) == antipode_orientation_formula(g)


def check_antipode_theorem(g: SimpleGraph) -> bool:
    return antipode_recursive(g) == theorem_antipode(g)


def check_po_tac_bijection(g: SimpleGraph) -> bool:
    """``|PO_tac(G)| = sum over ~ in E_c(G) of |O_ac(G/~)|``."""
    lhs = sum(1 for _ in po_tac_states(g))
    rhs = sum(stanley_count(contract(g, p)) for p in connected_partitions(g))
    return lhs == rhs


def has_mixed_closed_walk(h) -> bool:
    """Closed-walk search on (vertex, used-an-arc) states, independent of the contraction test."""
    n = h.n
    steps = [[] for _ in range(n)]
    for u, v in h.edges:
        steps[u].append((v, False))
        steps[v].append((u, False))
    for u, v in h.arcs:
        steps[u].append((v, True))
    # a closed walk of length >= 2 through an arc exists iff some arc (u, v)
    # has v reaching u; walks may revisit vertices, so reachability suffices
    for u, v in h.arcs:
        seen = {v}
        stack = [v]
        while stack:
            w = stack.pop()
            if w == u:
                return True
            for z, _ in steps[w]:
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
    return False


def check_po_tac_membership(g: SimpleGraph) -> bool:
    fast = set(po_tac_states(g))
    slow = set()
    for st in iproduct((0, 1, 2), repeat=g.num_edges):
        if not has_mixed_closed_walk(PartialOrientationState(g, st).decode()):
            slow.add(st)
    return fast == slow


# ---------------------------------------------------------------------------
# morphisms and characters


def check_zeta_action(g: SimpleGraph, ys=None) -> bool:
    """``zeta_y = phi_0 ↜ lambda_y = phi_chr ↜ mu_y``."""
    for y in ys if ys is not None else morphism_y_values(g):
        z = zeta(g, y)
        if _act_phi0(y)(g) != z or _act_chr(y)(g) != z:
            return False
    return True


def check_zeta_hopf(g: SimpleGraph, ys=None) -> bool:
    """``Z_G(X1 + X2, y) = sum over I ⊔ J = V of Z_{G|I}(X1, y) Z_{G|J}(X2, y)``."""
    full = (1 << g.n) - 1
    x1 = BiPoly.x()
    x2 = BiPoly.y()
    for y in ys if ys is not None else morphism_y_values(g):
        rhs = BiPoly()
        for mask in range(full + 1):
            a = zeta(induced_mask(g, mask), y)
            b = zeta(induced_mask(g, full & ~mask), y)
            rhs = rhs + a(x1) * b(x2)
        if add_coproduct_eval(zeta(g, y)) != rhs:
            return False
    return True


def check_theta_Delta(g: SimpleGraph) -> bool:
    return coproduct_Delta(theta(g)) == theta_tensor(coproduct_Delta(_sum(g)))


def check_theta_ac(g: SimpleGraph) -> bool:
    """``Theta_ac`` is compatible with both coproducts (acyclic quotient)."""
    a = _sum(g)
    t = theta_ac(g)
    return coproduct_Delta(t) == theta_tensor(coproduct_Delta(a), acyclic=True) and coproduct_contraction(
        t
    ) == theta_tensor(coproduct_contraction(a), acyclic=True)


def theta_delta_defect(g: SimpleGraph) -> TensorSum:
    """``delta ∘ Theta(G) - (Theta ⊗ Theta) ∘ delta(G)``."""
    return coproduct_contraction(theta(g)) - theta_tensor(coproduct_contraction(_sum(g)))


def check_theta_K3_defect() -> bool:
    """The defect on the triangle is ``12 (2-cycle ⊗ arc·vertex)``."""
    k3 = SimpleGraph(3, [(0, 1), (0, 2), (1, 2)])
    two_cycle = canonical_key(OrientedGraph(2, [(0, 1), (1, 0)]))
    arc_dot = canonical_key(OrientedGraph(3, [(0, 1)]))
    expected = TensorSum({(two_cycle, arc_dot): 12}, ORIENTED, 2)
    return theta_delta_defect(k3) == expected


def check_phi_lambda_chromatic(g: SimpleGraph) -> bool:
    return phi_lambda(_builtin("eps_delta"), g) == chromatic_polynomial(g)


def check_phi_lambda_counit(g: SimpleGraph) -> bool:
    """``eps_delta ∘ phi_lambda = lambda`` (``eps_delta`` on ``K[X]`` is evaluation at 1)."""
    for name in ("mu_1", "lambda_1", "mu_0"):
        lam = _builtin(name)
        if phi_lambda(lam, g)(1) != lam(g):
            return False
    return True


def check_phi_lambda_mu_y(g: SimpleGraph) -> bool:
    """``phi_{mu_y} = zeta_y`` since ``eps_delta ∘ zeta_y = mu_y``."""
    return all(phi_lambda(_mu(y), g) == zeta(g, y) for y in FIXED_Y)


def check_char_monoid(g: SimpleGraph) -> bool:
    """``mu_0^{⋆-1} = lambda_{-1}``, ``mu_y = mu_0 ⋆ lambda_y``, ``lambda_y = lambda_{-1} ⋆ mu_y``."""
    if _composite("mu_0_inv_delta")(g) != _lam(Fraction(-1))(g):
        return False
    for y in (Fraction(-1), Fraction(0), Fraction(1), Fraction(2)):
        if _conv_delta("mu_0", "lambda_y", y)(g) != _mu(y)(g):
            return False
        if _conv_delta("lambda_-1", "mu_y", y)(g) != _lam(y)(g):
            return False
    return True


def check_alpha(g: SimpleGraph) -> bool:
    """``alpha = mu_1^{*-1}`` by both inversion routes and by convolution."""
    a = _builtin("alpha")(g)
    return (
        _composite("mu_1_inv_Delta")(g) == a
        and _composite("mu_1_inv_Delta_rec")(g) == a
        and _composite("mu_1_conv_alpha")(g) == (1 if g.n == 0 else 0)
    )


def check_mu_y_inverse(g: SimpleGraph) -> bool:
    """``mu_y^{*-1}(G) = Z_G(-1, y)``."""
    z = fk_polynomial(g)
    return all(_mu_inv(y)(g) == z(-1, y) for y in FIXED_Y)


def check_mu_sc(g: OrientedGraph) -> bool:
    """``mu_sc = mu_1^{*-1}`` on oriented graphs."""
    eps = 1 if g.n == 0 else 0
    return _composite("mu_1o_conv_sc")(g) == eps and _composite("mu_1o_inv")(g) == _builtin("mu_sc")(g)


# ---------------------------------------------------------------------------
# polynomial specializations


def check_tutte_oracle(g: SimpleGraph) -> bool:
    return tutte_polynomial(g) == tutte_deletion_contraction_oracle(g)


def check_eq_conversions(g: SimpleGraph) -> bool:
    t, z = tutte_polynomial(g), fk_polynomial(g)
    return fk_from_tutte(t, g.n, g.cc) == z and tutte_from_fk(z, g.n, g.cc) == t


def check_zeta_specializations(g: SimpleGraph) -> bool:
    """``Z(X,-1) = chromatic``, ``Z(X,0) = X^|V|``, ``chromatic = (-1)^(|V|+cc) X^cc T(1-X, 0)``."""
    chr_ = chromatic_polynomial(g)
    if zeta(g, -1) != chr_ or zeta(g, 0) != phi0(g):
        return False
    t = tutte_polynomial(g).substitute(1 - BiPoly.x(), BiPoly.const(0))
    rhs = t * BiPoly.monomial(g.cc, 0) * (-1) ** (g.n + g.cc)
    return rhs == BiPoly.from_uni(chr_)


def check_tutte_counts(g: SimpleGraph) -> bool:
    t = tutte_polynomial(g)
    return (
        t(1, 2) == sum(1 for _ in covering_graphs(g))
        and t(1, 1) == sum(1 for _ in covering_forests(g))
        and t(2, 1) == sum(1 for _ in spanning_forests(g))
    )


def check_strong_orientations(g: SimpleGraph) -> bool:
    """``Z(-1, 1) = (-1)^cc T(0, 2) = alpha``; for connected graphs ``T(0,2) = |O_sc|``."""
    t02 = tutte_polynomial(g)(0, 2)
    sc = sum(1 for _ in strongly_connected_orientations(g))
    if g.is_connected() and t02 != sc:
        return False
    z = fk_polynomial(g)(-1, 1)
    return z == (-1) ** g.cc * t02 == (-1) ** g.cc * sc


def check_stanley(g: SimpleGraph) -> bool:
    return chromatic_polynomial(g)(-1) == (-1) ** g.n * stanley_count(g)


LAMBDA_TUTTE_Y = tuple(Fraction(v) for v in (-3, -1, Fraction(-1, 2), Fraction(1, 3), 1, 2, Fraction(5, 2), 4))


def check_lambda_tutte(g: SimpleGraph) -> bool:
    """``lambda_y(G) = y^(|V|-cc) T_G(1, 1+y)`` at eight rational ``y``."""
    t = tutte_polynomial(g)
    return all(_lam(y)(g) == y ** (g.n - g.cc) * t(1, 1 + y) for y in LAMBDA_TUTTE_Y)


def check_chromatic_alternating(g: SimpleGraph) -> bool:
    p = chromatic_polynomial(g)
    return p.degree == g.n and all(c * (-1) ** (g.n - d) >= 0 for d, c in p.items())


def check_chromatic_multiplicative(g: SimpleGraph, h: SimpleGraph) -> bool:
    from .graphs import disjoint_union

    return chromatic_polynomial(disjoint_union(g, h)) == chromatic_polynomial(g) * chromatic_polynomial(h)


Z_ANTIPODE_Y = tuple(Fraction(v) for v in (-1, 0, 1, 2))


def _po_signed_terms(g: SimpleGraph) -> list:
    el = g.edge_list
    out = []
    for mask, cnt in unoriented_mask_counts(g).items():
        h = SimpleGraph(g.n, [e for i, e in enumerate(el) if mask >> i & 1])
        out.append((h, cnt))
    return out


def check_z_antipode(g: SimpleGraph, ys=Z_ANTIPODE_Y) -> bool:
    """``Z_G(-X, y) = sum over H in PO_tac of (-1)^cc(gr0 H) Z_{gr0 H}(X, y)``."""
    terms = _po_signed_terms(g)
    for y in ys:
        rhs = UniPoly()
        for h, cnt in terms:
            rhs = rhs + zeta(h, y) * (cnt * (-1) ** h.cc)
        if zeta(g, y).substitute_neg() != rhs:
            return False
    return True


def z_antipode_tutte_sides(g: SimpleGraph, sign_form: str = "1-X") -> tuple:
    """Both sides of ``T_G(2 - X, Y) = sum over PO_tac of (base)^(cc(gr0 H) - cc(G)) T_{gr0 H}``.

    ``sign_form`` selects the base ``1 - X`` (the identity) or ``X - 1``.
    """
    x = BiPoly.x()
    base = x - 1 if sign_form == "X-1" else 1 - x
    lhs = tutte_polynomial(g).substitute(2 - x, BiPoly.y())
    rhs = BiPoly()
    for h, cnt in _po_signed_terms(g):
        rhs = rhs + base ** (h.cc - g.cc) * tutte_polynomial(h) * cnt
    return lhs, rhs


def check_z_antipode_tutte(g: SimpleGraph) -> bool:
    lhs, rhs = z_antipode_tutte_sides(g, "1-X")
    return lhs == rhs


# ---------------------------------------------------------------------------
# colorings


def check_pair_counts(g: SimpleGraph) -> bool:
    z = fk_polynomial(g)
    for x in range(4):
        if compatible_pair_count(g, x, 0) != proper_coloring_count(g, x):
            return False
        for r in range(4):
            if compatible_pair_count(g, x, r) != z(x, r - 1):
                return False
        for y in (1, 2, 3):
            if compatible_pair_signed_sum(g, x, y) != z(x, -y):
                return False
    return True


def check_opc(g: SimpleGraph) -> bool:
    z = fk_polynomial(g)
    for x in range(4):
        for y in (-1, 0, 1, 2):
            if opc_signed_sum(g, x, y, "nonneg") != z(-x, y):
                return False
        for y in (1, 2, 3):
            if opc_signed_sum(g, x, y, "negative") != z(-x, -y):
                return False
    return True


TUTTE_QUADRANT_POINTS = {
    "pos": ((2, 2), (3, 2), (2, 3)),
    "negneg": ((0, 0), (1, 0), (0, 1), (1, 1)),
    "negx": ((0, 2), (1, 2)),
    "negy": ((2, 0), (2, 1)),
}


def check_tutte_quadrants(g: SimpleGraph) -> bool:
    t = tutte_polynomial(g)
    for quadrant, points in TUTTE_QUADRANT_POINTS.items():
        for x, y in points:
            sx = -x if quadrant in ("negneg", "negx") else x
            sy = -y if quadrant in ("negneg", "negy") else y
            if tutte_negative_check(g, x, y, quadrant) != t(sx, sy):
                return False
    return True


# ---------------------------------------------------------------------------
# suites


@dataclass(frozen=True)
class CheckSpec:
    name: str
    fn: Callable
    universe: str = "simple"  # simple | oriented | single
    max_edges: int | None = None
    needs_po: bool = False


SUITES: dict = {
    "axioms": [
        CheckSpec("coassociativity_Delta", check_coassociativity_Delta),
        CheckSpec("coassociativity_delta", check_coassociativity_delta),
        CheckSpec("cocommutativity_Delta", check_cocommutativity_Delta),
        CheckSpec("counit_laws", check_counits),
        CheckSpec("compatibility", check_compatibility),
        CheckSpec("oriented_coassociativity_Delta", check_coassociativity_Delta, "oriented"),
        CheckSpec("oriented_coassociativity_delta", check_coassociativity_delta, "oriented"),
        CheckSpec("oriented_counit_laws", check_counits, "oriented"),
        CheckSpec("oriented_compatibility", check_compatibility, "oriented"),
        CheckSpec("acyclic_quotient", check_acyclic_quotient, "oriented"),
    ],
    "antipode": [
        CheckSpec("antipode_law", check_antipode_law),
        CheckSpec("antipode_theorem", check_antipode_theorem),
        CheckSpec("antipode_orientations", check_antipode_orientations, needs_po=True),
        CheckSpec("po_tac_bijection", check_po_tac_bijection, needs_po=True),
        CheckSpec("po_tac_membership", check_po_tac_membership, max_edges=8, needs_po=True),
    ],
    "morphisms": [
        CheckSpec("zeta_action", check_zeta_action),
        CheckSpec("zeta_hopf", check_zeta_hopf),
        CheckSpec("theta_Delta", check_theta_Delta),
        CheckSpec("theta_ac", check_theta_ac),
        CheckSpec("theta_K3_defect", lambda _g: check_theta_K3_defect(), "single"),
        CheckSpec("phi_lambda_chromatic", check_phi_lambda_chromatic),
        CheckSpec("phi_lambda_counit", check_phi_lambda_counit),
        CheckSpec("phi_lambda_mu_y", check_phi_lambda_mu_y),
        CheckSpec("character_monoid", check_char_monoid),
        CheckSpec("alpha_inverse", check_alpha),
        CheckSpec("mu_y_inverse", check_mu_y_inverse),
        CheckSpec("mu_sc_inverse", check_mu_sc, "oriented"),
    ],
    "specializations": [
        CheckSpec("tutte_oracle", check_tutte_oracle),
        CheckSpec("eq_conversions", check_eq_conversions),
        CheckSpec("zeta_specializations", check_zeta_specializations),
        CheckSpec("tutte_counts", check_tutte_counts),
        CheckSpec("lambda_tutte", check_lambda_tutte),
        CheckSpec("chromatic_alternating", check_chromatic_alternating),
        CheckSpec("z_antipode", check_z_antipode, needs_po=True),
        CheckSpec("z_antipode_tutte", check_z_antipode_tutte, needs_po=True),
    ],
    "colorings": [
        CheckSpec("pair_counts", check_pair_counts),
        CheckSpec("opc", check_opc, max_edges=6, needs_po=True),
        CheckSpec("tutte_quadrants", check_tutte_quadrants, max_edges=6, needs_po=True),
    ],
    "orientations": [
        CheckSpec("strong_orientations", check_strong_orientations),
        CheckSpec("stanley", check_stanley),
        CheckSpec("theta_Delta", check_theta_Delta),
    ],
}
SUITE_NAMES = tuple(SUITES) + ("all",)
CHECKS = {f"{suite}.{c.name}": c for suite, specs in SUITES.items() for c in specs}


@dataclass
class CheckResult:
    check: str
    graph: str
    status: str  # pass | fail | skipped
    detail: str = ""


@dataclass
class RunReport:
    suite: str
    params: dict
    results: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def failures(self) -> list:
        return [r for r in self.results if r.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        counts: dict = {}
        for r in self.results:
            counts.setdefault(r.check, {"pass": 0, "fail": 0, "skipped": 0})[r.status] += 1
        return counts

    def to_dict(self) -> dict:
        """Deterministic content (no timing)."""
        return {
            "suite": self.suite,
            "params": self.params,
            "summary": self.summary(),
            "failures": [asdict(r) for r in self.failures],
            "ok": self.ok,
        }


def run_check(check_id: str, graph_text: str) -> CheckResult:
    spec = CHECKS[check_id]
    g = parse_any(graph_text)
    if spec.needs_po and g.num_edges > MAX_PO_EDGES:
        return CheckResult(check_id, graph_text, "skipped", f"more than {MAX_PO_EDGES} edges")
    try:
        ok = spec.fn(g)
    except EnumerationCapError as exc:
        return CheckResult(check_id, graph_text, "skipped", str(exc))
    except Exception as exc:  # reported as a failure with its counterexample
        return CheckResult(check_id, graph_text, "fail", f"{type(exc).__name__}: {exc}")
    return CheckResult(check_id, graph_text, "pass" if ok else "fail", "" if ok else "identity does not hold")


def suite_tasks(suite: str, max_vertices: int, max_edges: int | None = None) -> list:
    """``(check id, graph string)`` pairs in deterministic order."""
    names = list(SUITES) if suite == "all" else [suite]
    simple = simple_isoclasses_upto(max_vertices, max_edges)
    oriented = oriented_isoclasses_upto(min(4, max_vertices))
    tasks = []
    for s in names:
        for spec in SUITES[s]:
            cid = f"{s}.{spec.name}"
            if spec.universe == "single":
                tasks.append((cid, "Bw"))
                continue
            universe = oriented if spec.universe == "oriented" else simple
            for g in universe:
                if spec.max_edges is not None and g.num_edges > spec.max_edges:
                    continue
                tasks.append((cid, emit_any(g)))
    return tasks


def _run_chunk(chunk: list) -> list:
    return [run_check(c, t) for c, t in chunk]


def run_suite(suite: str, max_vertices: int, max_edges: int | None = None, jobs: int = 1) -> RunReport:
    if suite not in SUITE_NAMES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)}")
    if not 1 <= max_vertices <= 7:
        raise ValueError("max_vertices must be between 1 and 7")
    start = time.perf_counter()
    tasks = suite_tasks(suite, max_vertices, max_edges)
    if jobs > 1 and len(tasks) > 1:
        chunks = [tasks[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_chunk, chunks))
        order = {t: i for i, t in enumerate(tasks)}
        results = sorted((r for p in parts for r in p), key=lambda r: order[(r.check, r.graph)])
    else:
        results = _run_chunk(tasks)
    report = RunReport(suite, {"max_vertices": max_vertices, "max_edges": max_edges}, results)
    report.elapsed = time.perf_counter() - start
    return report
