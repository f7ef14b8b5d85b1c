from __future__ import annotations

from fractions import Fraction

import pytest

from graphbialg.poly import BiPoly, PolyError, UniPoly, format_poly

X, Y = BiPoly.x(), BiPoly.y()
x = UniPoly.x()


def test_uni_arithmetic():
    p = (x + 1) ** 3
    assert p.coeffs == {0: 1, 1: 3, 2: 3, 3: 1}
    assert (p - p).is_zero()
    assert p(Fraction(1, 2)) == Fraction(27, 8)
    assert UniPoly.falling_factorial(3) == x * (x - 1) * (x - 2)
    assert (x**2 - x).substitute_neg() == x**2 + x


def test_uni_compose():
    p = x**2 + 1
    assert p(x + 1) == x**2 + 2 * x + 2
    assert p(X + Y) == X**2 + 2 * X * Y + Y**2 + 1


def test_no_zero_coefficients_stored():
    assert UniPoly({0: 0, 2: 1}).coeffs == {2: 1}
    assert BiPoly({(1, 1): 0}).is_zero()


def test_bi_substitute_and_shift():
    p = X**2 + X + Y
    assert p.shift(-1, -1) == (X - 1) ** 2 + (X - 1) + (Y - 1)
    assert p.substitute(1 - X, BiPoly.const(0)) == (1 - X) ** 2 + (1 - X)
    assert p(2, 2) == 8
    assert p.specialize_y(0) == x**2 + x


def test_divisions():
    p = BiPoly.monomial(2, 3, 5)
    assert p.divide_monomial(1, 2) == BiPoly.monomial(1, 1, 5)
    with pytest.raises(PolyError):
        p.divide_monomial(3, 0)
    q = (X - 1) ** 2 * (Y - 1) * (X + Y)
    assert q.divide_linear_powers(2, 1) == X + Y
    with pytest.raises(PolyError):
        (X + Y).divide_linear_powers(1, 0)


def test_format():
    assert format_poly(X**2 + X + Y) == "X^2 + X + Y"
    assert format_poly(x**2 - x, ("X",)) == "X^2 - X"
    assert format_poly(BiPoly()) == "0"
