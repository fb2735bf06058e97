"""Elements (g0(x) + g1(x) y) / h(x) of the function field F_q(x, y)."""
from __future__ import annotations

from dataclasses import dataclass

from ..curve import CurveSpec
from ..errors import MixedFields, ZeroInverse
from ..gf import poly as P
from ..gf.poly import Poly


def _relation(curve: CurveSpec) -> tuple[Poly, Poly]:
    """(c, e) with y^2 = c(x) y + e(x)."""
    F = curve.field
    c = P.trim((F.neg(curve.a3), F.neg(curve.a1)))
    e = P.trim((curve.a6, curve.a4, curve.a2, 1))
    return c, e


@dataclass(frozen=True)
class CurveFunction:
    curve: CurveSpec
    g0: Poly
    g1: Poly
    h: Poly

    @classmethod
    def make(cls, curve: CurveSpec, g0=(), g1=(), h=(1,)) -> "CurveFunction":
        """Build the canonical representative: no common factor, monic denominator."""
        F = curve.field
        g0, g1, h = P.trim(tuple(g0)), P.trim(tuple(g1)), P.trim(tuple(h))
        if not h:
            raise ZeroInverse("zero denominator")
        if not g0 and not g1:
            return cls(curve, (), (), (1,))
        g = P.gcd(F, P.gcd(F, g0, g1), h)
        if len(g) > 1:
            g0 = P.divmod_(F, g0, g)[0]
            g1 = P.divmod_(F, g1, g)[0]
            h = P.divmod_(F, h, g)[0]
        lc = F.inv(h[-1])
        return cls(curve, P.scale(F, lc, g0), P.scale(F, lc, g1), P.scale(F, lc, h))

    # constructors
    @classmethod
    def constant(cls, curve: CurveSpec, c: int) -> "CurveFunction":
        return cls.make(curve, P.const(c))

    @classmethod
    def x(cls, curve: CurveSpec) -> "CurveFunction":
        return cls.make(curve, P.X)

    @classmethod
    def y(cls, curve: CurveSpec) -> "CurveFunction":
        return cls.make(curve, (), P.ONE)

    @classmethod
    def monomial(cls, curve: CurveSpec, i: int, j: int) -> "CurveFunction":
        """x^i y^j for j in {0, 1}."""
        xi = (0,) * i + (1,)
        return cls.make(curve, xi, ()) if j == 0 else cls.make(curve, (), xi)

    @property
    def field(self):
        return self.curve.field

    @property
    def is_zero(self) -> bool:
        return not self.g0 and not self.g1

    @property
    def is_constant(self) -> bool:
        return not self.g1 and len(self.g0) <= 1 and self.h == (1,)

    def _same(self, other: "CurveFunction") -> None:
        if other.curve != self.curve:
            raise MixedFields("functions on different curves")

    def norm(self) -> Poly:
        """Numerator norm (g0 + g1 y)(g0 + g1 y') as a polynomial in x."""
        F = self.field
        c, e = _relation(self.curve)
        g0, g1 = self.g0, self.g1
        return P.sub(F, P.add(F, P.mul(F, g0, g0), P.mul(F, P.mul(F, g0, g1), c)),
                     P.mul(F, P.mul(F, g1, g1), e))

    # arithmetic
    def __add__(self, other: "CurveFunction") -> "CurveFunction":
        self._same(other)
        F = self.field
        if self.h == other.h:
            return CurveFunction.make(self.curve, P.add(F, self.g0, other.g0),
                                      P.add(F, self.g1, other.g1), self.h)
        return CurveFunction.make(
            self.curve,
            P.add(F, P.mul(F, self.g0, other.h), P.mul(F, other.g0, self.h)),
            P.add(F, P.mul(F, self.g1, other.h), P.mul(F, other.g1, self.h)),
            P.mul(F, self.h, other.h))

    def __neg__(self) -> "CurveFunction":
        F = self.field
        return CurveFunction(self.curve, P.neg(F, self.g0), P.neg(F, self.g1), self.h)

    def __sub__(self, other: "CurveFunction") -> "CurveFunction":
        return self + (-other)

    def __mul__(self, other) -> "CurveFunction":
        if isinstance(other, int):
            return self.scale(other)
        self._same(other)
        F = self.field
        c, e = _relation(self.curve)
        a0, a1, b0, b1 = self.g0, self.g1, other.g0, other.g1
        t = P.mul(F, a1, b1)
        n0 = P.add(F, P.mul(F, a0, b0), P.mul(F, t, e))
        n1 = P.add(F, P.add(F, P.mul(F, a0, b1), P.mul(F, a1, b0)), P.mul(F, t, c))
        return CurveFunction.make(self.curve, n0, n1, P.mul(F, self.h, other.h))

    def scale(self, c: int) -> "CurveFunction":
        F = self.field
        if c == 0:
            return CurveFunction.make(self.curve)
        return CurveFunction(self.curve, P.scale(F, c, self.g0), P.scale(F, c, self.g1), self.h)

    def inv(self) -> "CurveFunction":
        if self.is_zero:
            raise ZeroInverse("inverse of the zero function")
        F = self.field
        c, _ = _relation(self.curve)
        conj0 = P.add(F, self.g0, P.mul(F, self.g1, c))
        conj1 = P.neg(F, self.g1)
        N = self.norm()
        return CurveFunction.make(self.curve, P.mul(F, self.h, conj0), P.mul(F, self.h, conj1), N)

    def __truediv__(self, other: "CurveFunction") -> "CurveFunction":
        return self * other.inv()

    def __pow__(self, e: int) -> "CurveFunction":
        if e < 0:
            return self.inv() ** (-e)
        acc = CurveFunction.constant(self.curve, 1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def __repr__(self) -> str:
        return f"CurveFunction(g0={list(self.g0)}, g1={list(self.g1)}, h={list(self.h)})"

    def to_dict(self) -> dict:
        F = self.field
        enc = lambda f: [list(F.to_coeffs(c)) for c in f]
        return {"g0": enc(self.g0), "g1": enc(self.g1), "h": enc(self.h)}

    @classmethod
    def from_dict(cls, curve: CurveSpec, d: dict) -> "CurveFunction":
        F = curve.field
        dec = lambda f: tuple(F.from_coeffs(c) for c in f)
        return cls.make(curve, dec(d["g0"]), dec(d["g1"]), dec(d["h"]))


def fn_arith(op: str, f: CurveFunction, g=None) -> CurveFunction:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "inv":
        return f.inv()
    if op == "scalar_mul":
        return f.scale(g)
    if op == "pow":
        return f ** g
    raise ValueError(f"unknown operation {op!r}")


def linear_combination(funcs, coeffs) -> CurveFunction:
    it = iter(funcs)
    first = next(it)
    acc = first.scale(coeffs[0])
    for f, c in zip(it, coeffs[1:]):
        if c:
            acc = acc + f.scale(c)
    return acc


def apply_automorphism(sigma, f: CurveFunction) -> CurveFunction:
    """sigma(f) = f(sigma(x), sigma(y))."""
    if sigma.curve != f.curve:
        raise MixedFields("automorphism and function live on different curves")
    F = f.field
    A, B, C, D, E = sigma.action
    g0 = P.compose_linear(F, f.g0, A, B)
    g1 = P.compose_linear(F, f.g1, A, B)
    h = P.compose_linear(F, f.h, A, B)
    lin = P.trim((E, D))
    new0 = P.add(F, g0, P.mul(F, g1, lin))
    new1 = P.scale(F, C, g1)
    return CurveFunction.make(f.curve, new0, new1, h)
