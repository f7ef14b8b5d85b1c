"""Sparse exact-rational polynomials in one variable ``X`` and in two variables ``X, Y``."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Mapping


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"exact rational expected, got {type(c).__name__}")


class PolyError(ArithmeticError):
    pass


class UniPoly:
    """Polynomial in ``X`` stored as ``{degree: coefficient}`` without zeros."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        c = {}
        for d, v in (coeffs or {}).items():
            if d < 0:
                raise PolyError(f"negative degree {d}")
            v = _frac(v)
            if v:
                c[d] = c.get(d, Fraction(0)) + v
        self._c = {d: v for d, v in c.items() if v}
        self._hash = None

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, d: int, c=1) -> "UniPoly":
        return cls({d: c})

    @classmethod
    def x(cls) -> "UniPoly":
        return cls({1: 1})

    @classmethod
    def falling_factorial(cls, n: int) -> "UniPoly":
        """``X(X-1)...(X-n+1)``."""
        p = cls.const(1)
        for k in range(n):
            p = p * cls({1: 1, 0: -k})
        return p

    @classmethod
    def from_dense(cls, coeffs: Iterable) -> "UniPoly":
        return cls(dict(enumerate(coeffs)))

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def __getitem__(self, d: int) -> Fraction:
        return self._c.get(d, Fraction(0))

    def items(self):
        return sorted(self._c.items())

    @property
    def degree(self) -> int:
        """``-1`` for the zero polynomial."""
        return max(self._c, default=-1)

    @property
    def low_degree(self) -> int:
        return min(self._c, default=-1)

    def is_zero(self) -> bool:
        return not self._c

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly.const(other)

    def __add__(self, other) -> "UniPoly":
        o = self._coerce(other)
        c = dict(self._c)
        for d, v in o._c.items():
            c[d] = c.get(d, 0) + v
        return UniPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly({d: -v for d, v in self._c.items()})

    def __sub__(self, other) -> "UniPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            s = _frac(other)
            return UniPoly({d: v * s for d, v in self._c.items()})
        c: dict = {}
        for d1, v1 in self._c.items():
            for d2, v2 in other._c.items():
                c[d1 + d2] = c.get(d1 + d2, 0) + v1 * v2
        return UniPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise PolyError("negative power")
        out = UniPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UniPoly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __call__(self, x):
        """Evaluate at a scalar (Horner) or compose with a polynomial."""
        if isinstance(x, (UniPoly, BiPoly)):
            out = x * 0
            for d in range(self.degree, -1, -1):
                out = out * x + self[d]
            return out
        x = _frac(x)
        out = Fraction(0)
        for d in range(self.degree, -1, -1):
            out = out * x + self._c.get(d, 0)
        return out

    def substitute_neg(self) -> "UniPoly":
        """``P(-X)``."""
        return UniPoly({d: (-v if d % 2 else v) for d, v in self._c.items()})

    def __repr__(self) -> str:
        return f"UniPoly({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)


class BiPoly:
    """Polynomial in ``X, Y`` stored as ``{(dx, dy): coefficient}`` without zeros."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[tuple, object] | None = None):
        c: dict = {}
        for (dx, dy), v in (coeffs or {}).items():
            if dx < 0 or dy < 0:
                raise PolyError(f"negative exponent ({dx}, {dy})")
            c[(dx, dy)] = c.get((dx, dy), Fraction(0)) + _frac(v)
        self._c = {k: v for k, v in c.items() if v}
        self._hash = None

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, dx: int, dy: int, c=1) -> "BiPoly":
        return cls({(dx, dy): c})

    @classmethod
    def from_uni(cls, p: UniPoly, var: str = "X") -> "BiPoly":
        if var == "X":
            return cls({(d, 0): v for d, v in p.coeffs.items()})
        return cls({(0, d): v for d, v in p.coeffs.items()})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def __getitem__(self, k: tuple) -> Fraction:
        return self._c.get(k, Fraction(0))

    def items(self):
        return sorted(self._c.items())

    def is_zero(self) -> bool:
        return not self._c

    @property
    def x_degree(self) -> int:
        return max((dx for dx, _ in self._c), default=-1)

    @property
    def y_degree(self) -> int:
        return max((dy for _, dy in self._c), default=-1)

    @property
    def x_low_degree(self) -> int:
        return min((dx for dx, _ in self._c), default=-1)

    @property
    def y_low_degree(self) -> int:
        return min((dy for _, dy in self._c), default=-1)

    def _coerce(self, other) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, UniPoly):
            return BiPoly.from_uni(other)
        return BiPoly.const(other)

    def __add__(self, other) -> "BiPoly":
        o = self._coerce(other)
        c = dict(self._c)
        for k, v in o._c.items():
            c[k] = c.get(k, 0) + v
        return BiPoly(c)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other) -> "BiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "BiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "BiPoly":
        if not isinstance(other, (BiPoly, UniPoly)):
            s = _frac(other)
            return BiPoly({k: v * s for k, v in self._c.items()})
        o = self._coerce(other)
        c: dict = {}
        for (a, b), v1 in self._c.items():
            for (p, q), v2 in o._c.items():
                k = (a + p, b + q)
                c[k] = c.get(k, 0) + v1 * v2
        return BiPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise PolyError("negative power")
        out = BiPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, BiPoly):
            return self._c == other._c
        if isinstance(other, UniPoly):
            return self == BiPoly.from_uni(other)
        if isinstance(other, (int, Fraction)):
            return self._c == BiPoly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __call__(self, x, y) -> Fraction:
        x, y = _frac(x), _frac(y)
        return sum((v * x**dx * y**dy for (dx, dy), v in self._c.items()), Fraction(0))

    def substitute(self, x: "BiPoly", y: "BiPoly") -> "BiPoly":
        """``P(x(X,Y), y(X,Y))`` for polynomial arguments."""
        x, y = self._coerce(x), self._coerce(y)
        xp = [BiPoly.const(1)]
        yp = [BiPoly.const(1)]
        for _ in range(self.x_degree):
            xp.append(xp[-1] * x)
        for _ in range(self.y_degree):
            yp.append(yp[-1] * y)
        out = BiPoly()
        for (dx, dy), v in self._c.items():
            out = out + xp[dx] * yp[dy] * v
        return out

    def shift(self, a=0, b=0) -> "BiPoly":
        """``P(X + a, Y + b)``, expanded by the binomial theorem."""
        a, b = _frac(a), _frac(b)
        c: dict = {}
        for (dx, dy), v in self._c.items():
            for i in range(dx + 1):
                ci = comb(dx, i) * a ** (dx - i)
                if not ci:
                    continue
                for j in range(dy + 1):
                    cj = comb(dy, j) * b ** (dy - j)
                    if cj:
                        c[(i, j)] = c.get((i, j), 0) + v * ci * cj
        return BiPoly(c)

    def divide_monomial(self, dx: int, dy: int) -> "BiPoly":
        """Exact division by ``X^dx Y^dy``; raises if it does not divide."""
        if self._c and (self.x_low_degree < dx or self.y_low_degree < dy):
            raise PolyError(f"X^{dx} Y^{dy} does not divide the polynomial")
        return BiPoly({(a - dx, b - dy): v for (a, b), v in self._c.items()})

    def divide_linear_powers(self, a: int, b: int, x0=1, y0=1) -> "BiPoly":
        """Exact division by ``(X - x0)^a (Y - y0)^b``."""
        return self.shift(x0, y0).divide_monomial(a, b).shift(-_frac(x0), -_frac(y0))

    def specialize_y(self, y) -> UniPoly:
        y = _frac(y)
        c: dict = {}
        for (dx, dy), v in self._c.items():
            c[dx] = c.get(dx, 0) + v * y**dy
        return UniPoly(c)

    def specialize_x(self, x) -> UniPoly:
        x = _frac(x)
        c: dict = {}
        for (dx, dy), v in self._c.items():
            c[dy] = c.get(dy, 0) + v * x**dx
        return UniPoly(c)

    def __repr__(self) -> str:
        return f"BiPoly({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)


def _mono(vars_exps: list) -> str:
    parts = []
    for name, e in vars_exps:
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(p, names=("X", "Y")) -> str:
    """Terms in decreasing degree order, e.g. ``X^2 + X + Y``."""
    if isinstance(p, UniPoly):
        terms = [((d,), v) for d, v in sorted(p.coeffs.items(), reverse=True)]
    else:
        terms = sorted(p.coeffs.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))
    if not terms:
        return "0"
    out = []
    for exps, v in terms:
        mono = _mono(list(zip(names, exps)))
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{a}*{mono}"
        else:
            body = str(a)
        out.append((sign, body))
    first_sign, first = out[0]
    s = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        s += f" {sign} {body}"
    return s
