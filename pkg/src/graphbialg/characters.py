"""Named characters of the graph double bialgebras."""

from __future__ import annotations

from fractions import Fraction

from .enumeration import components_strongly_connected, strongly_connected_orientations
from .hopf import ORIENTED, SIMPLE, Character
from .invariants import chromatic_polynomial, fk_polynomial, lambda_character, mu_character


def eps_Delta(flavor: str = SIMPLE) -> Character:
    """Counit of ``Delta``: 1 on the empty graph only."""
    return Character(lambda g: 1 if g.n == 0 else 0, flavor, "eps_Delta")


def _arcless(g) -> bool:
    return not (g.edges if hasattr(g, "edges") else g.arcs)


def eps_delta(flavor: str = SIMPLE) -> Character:
    """Counit of ``delta``: 1 on graphs without edges (arcs)."""
    return Character(lambda g: 1 if _arcless(g) else 0, flavor, "eps_delta")


mu_y = mu_character
lambda_y = lambda_character


def mu_0() -> Character:
    return mu_character(0)


def mu_1() -> Character:
    """``2^|E|`` on simple graphs."""
    return mu_character(1)


def mu_1_oriented() -> Character:
    """The constant character 1 on oriented graphs."""
    return Character(lambda g: 1, ORIENTED, "mu_1")


def mu_sc() -> Character:
    """``(-1)^cc`` when every weak component is strongly connected, else 0."""

    def rule(g):
        return (-1) ** g.cc if components_strongly_connected(g) else 0

    return Character(rule, ORIENTED, "mu_sc")


def alpha() -> Character:
    """``(-1)^cc(G) |O_sc(G)|``."""

    def rule(g):
        return (-1) ** g.cc * sum(1 for _ in strongly_connected_orientations(g))

    return Character(rule, SIMPLE, "alpha")


def chromatic_at(q) -> Character:
    q = Fraction(q)
    return Character(lambda g: chromatic_polynomial(g)(q), SIMPLE, f"chr@{q}")


def counting_at(x, y) -> Character:
    """``G -> Z_G(x, y)``."""
    x, y = Fraction(x), Fraction(y)
    return Character(lambda g: fk_polynomial(g)(x, y), SIMPLE, f"Z@({x},{y})")
