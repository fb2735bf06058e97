"""Weierstrass curves y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q."""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    CatalogVerificationFailed,
    HasseWeilViolation,
    NotASquare,
    PointNotOnCurve,
    SingularCurve,
    UnsupportedCharacteristic,
)
from .gf.field import FieldSpec


@dataclass(frozen=True)
class CurveSpec:
    field: FieldSpec
    a1: int = 0
    a2: int = 0
    a3: int = 0
    a4: int = 0
    a6: int = 0

    @property
    def coefficients(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __repr__(self) -> str:
        names = ("a1", "a2", "a3", "a4", "a6")
        coeffs = ", ".join(f"{n}={v}" for n, v in zip(names, self.coefficients) if v)
        return f"CurveSpec(F_{self.field.q}; {coeffs})"

    def rhs(self, x: int) -> int:
        """x^3 + a2 x^2 + a4 x + a6."""
        F = self.field
        return F.add(F.mul(F.add(F.mul(F.add(x, self.a2), x), self.a4), x), self.a6)

    def lhs(self, x: int, y: int) -> int:
        """y^2 + a1 xy + a3 y."""
        F = self.field
        return F.mul(F.add(F.add(y, F.mul(self.a1, x)), self.a3), y)

    def contains(self, P: "Point") -> bool:
        if P.is_infinity:
            return True
        return self.lhs(P.x, P.y) == self.rhs(P.x)

    def to_dict(self) -> dict:
        F = self.field
        out = {"field": F.to_dict()}
        for name, v in zip(("a1", "a2", "a3", "a4", "a6"), self.coefficients):
            out[name] = list(F.to_coeffs(v))
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "CurveSpec":
        F = FieldSpec.from_dict(d["field"])
        return cls(F, *(F.from_coeffs(d[n]) for n in ("a1", "a2", "a3", "a4", "a6")))


@dataclass(frozen=True)
class Point:
    """A rational point; ``Point()`` (both coordinates None) is the point at infinity O."""

    x: int | None = None
    y: int | None = None

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    @property
    def key(self) -> tuple:
        return (0,) if self.x is None else (1, self.x, self.y)

    def __lt__(self, other: "Point") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        return "O" if self.x is None else f"({self.x},{self.y})"

    def to_json(self, F: FieldSpec):
        if self.is_infinity:
            return "O"
        return {"x": list(F.to_coeffs(self.x)), "y": list(F.to_coeffs(self.y))}

    @classmethod
    def from_json(cls, F: FieldSpec, d) -> "Point":
        if d == "O":
            return INFINITY
        return cls(F.from_coeffs(d["x"]), F.from_coeffs(d["y"]))


INFINITY = Point()


# ---------------------------------------------------------------- invariants

def b_invariants(curve: CurveSpec) -> tuple[int, int, int, int]:
    F = curve.field
    a1, a2, a3, a4, a6 = curve.coefficients
    m, ad, n = F.mul, F.add, F.from_int
    b2 = ad(m(a1, a1), m(n(4), a2))
    b4 = ad(m(n(2), a4), m(a1, a3))
    b6 = ad(m(a3, a3), m(n(4), a6))
    b8 = F.sum([m(m(a1, a1), a6), m(n(4), m(a2, a6)), F.neg(m(m(a1, a3), a4)),
                m(a2, m(a3, a3)), F.neg(m(a4, a4))])
    return b2, b4, b6, b8


def discriminant_and_j(curve: CurveSpec) -> tuple[int, int | None]:
    """(Delta, j); j is None for a singular model."""
    F = curve.field
    m, n = F.mul, F.from_int
    b2, b4, b6, b8 = b_invariants(curve)
    delta = F.sum([
        F.neg(m(m(b2, b2), b8)),
        F.neg(m(n(8), m(b4, m(b4, b4)))),
        F.neg(m(n(27), m(b6, b6))),
        m(n(9), m(b2, m(b4, b6))),
    ])
    if delta == 0:
        return 0, None
    c4 = F.sub(m(b2, b2), m(n(24), b4))
    return delta, F.div(m(c4, m(c4, c4)), delta)


def is_nonsingular(curve: CurveSpec) -> bool:
    return discriminant_and_j(curve)[0] != 0


# ---------------------------------------------------------------- point sets

@lru_cache(maxsize=64)
def enumerate_points(curve: CurveSpec) -> tuple[Point, ...]:
    """All rational points: O first, then affine points in (x, y) element order."""
    if not is_nonsingular(curve):
        raise SingularCurve(f"{curve} has zero discriminant")
    F = curve.field
    q = F.q
    pts = [INFINITY]
    if curve.a1 == 0:
        fibre: dict[int, list[int]] = {}
        for y in range(q):
            fibre.setdefault(F.mul(F.add(y, curve.a3), y), []).append(y)
        for x in range(q):
            for y in fibre.get(curve.rhs(x), ()):
                pts.append(Point(x, y))
    else:
        for x in range(q):
            c1 = F.add(F.mul(curve.a1, x), curve.a3)
            for y in F.quadratic_roots(1, c1, F.neg(curve.rhs(x))):
                pts.append(Point(x, y))
    N = len(pts)
    if (N - q - 1) ** 2 > 4 * q:
        raise HasseWeilViolation(f"{N} points over F_{q} breaks the Hasse-Weil bound")
    return tuple(pts)


@lru_cache(maxsize=64)
def points_by_x(curve: CurveSpec) -> dict[int, tuple[Point, ...]]:
    out: dict[int, list[Point]] = {}
    for P in enumerate_points(curve)[1:]:
        out.setdefault(P.x, []).append(P)
    return {x: tuple(v) for x, v in out.items()}


def point_count(curve: CurveSpec) -> int:
    return len(enumerate_points(curve))


def sqrt_q(F: FieldSpec) -> int:
    r = math.isqrt(F.q)
    if r * r != F.q:
        raise NotASquare(f"q = {F.q} is not a square")
    return r


def trace(curve: CurveSpec) -> int:
    return curve.field.q + 1 - point_count(curve)


def is_maximal(curve: CurveSpec) -> bool:
    return trace(curve) == -2 * sqrt_q(curve.field)


def is_minimal(curve: CurveSpec) -> bool:
    return trace(curve) == 2 * sqrt_q(curve.field)


# ----------------------------------------------------------------- group law

def _require_on(curve: CurveSpec, *pts: Point) -> None:
    for P in pts:
        if not curve.contains(P):
            raise PointNotOnCurve(f"{P} is not on {curve}")


def point_neg(curve: CurveSpec, P: Point) -> Point:
    _require_on(curve, P)
    if P.is_infinity:
        return P
    F = curve.field
    return Point(P.x, F.sub(F.neg(P.y), F.add(F.mul(curve.a1, P.x), curve.a3)))


def point_add(curve: CurveSpec, P: Point, Q: Point) -> Point:
    _require_on(curve, P, Q)
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    F = curve.field
    a1, a2, a3, a4, a6 = curve.coefficients
    m, ad, sb, n = F.mul, F.add, F.sub, F.from_int
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if ad(ad(y1, y2), ad(m(a1, x2), a3)) == 0:
            return INFINITY
        den = ad(ad(m(n(2), y1), m(a1, x1)), a3)
        lam = F.div(sb(ad(ad(m(n(3), m(x1, x1)), m(n(2), m(a2, x1))), a4), m(a1, y1)), den)
        nu = F.div(sb(ad(ad(F.neg(m(x1, m(x1, x1))), m(a4, x1)), m(n(2), a6)), m(a3, y1)), den)
    else:
        den = sb(x2, x1)
        lam = F.div(sb(y2, y1), den)
        nu = F.div(sb(m(y1, x2), m(y2, x1)), den)
    x3 = sb(sb(sb(ad(m(lam, lam), m(a1, lam)), a2), x1), x2)
    y3 = sb(sb(F.neg(m(ad(lam, a1), x3)), nu), a3)
    return Point(x3, y3)


def group_op(op: str, curve: CurveSpec, P: Point, Q: Point | None = None) -> Point:
    if op == "add":
        return point_add(curve, P, Q)
    if op == "neg":
        return point_neg(curve, P)
    raise ValueError(f"unknown group operation {op!r}")


def scalar_mul(curve: CurveSpec, n: int, P: Point) -> Point:
    if n < 0:
        return scalar_mul(curve, -n, point_neg(curve, P))
    acc, base = INFINITY, P
    while n:
        if n & 1:
            acc = point_add(curve, acc, base)
        base = point_add(curve, base, base)
        n >>= 1
    return acc


# ------------------------------------------------------------ maximal curves

FAMILIES = ("char2_basic", "char2_twist", "char3_lemma214", "p3mod4_lemma214", "p2mod3_lemma215")


@dataclass(frozen=True)
class CurveCatalogEntry:
    curve: CurveSpec
    family: str
    parameter: int | None
    expected_count: int

    @property
    def point_count(self) -> int:
        return point_count(self.curve)


def catalog_families(p: int) -> list[str]:
    """Families able to produce a maximal curve in characteristic p, in preference order."""
    if p == 2:
        return ["char2"]
    if p == 3:
        return ["char3_lemma214"]
    out = []
    if p % 4 == 3:
        out.append("p3mod4_lemma214")
    if p % 3 == 2:
        out.append("p2mod3_lemma215")
    return out


def _smallest_nonsquare(F: FieldSpec) -> int:
    return next(v for v in range(1, F.q) if not F.is_square(v))


@lru_cache(maxsize=None)
def maximal_curve(F: FieldSpec, family: str | None = None) -> CurveCatalogEntry:
    """A maximal curve over F (q = p^a, a even), re-verified by counting points."""
    p, a = F.p, F.a
    if a % 2:
        raise NotASquare(f"a must be even (q = {p}^{a})")
    allowed = catalog_families(p)
    if not allowed:
        raise UnsupportedCharacteristic(
            f"p = {p}: need p = 2, p = 3, p = 3 mod 4 or p = 2 mod 3")
    if family is None:
        family = allowed[0]
    if family in ("char2_basic", "char2_twist"):
        family = "char2"
    if family not in allowed:
        raise UnsupportedCharacteristic(f"family {family!r} does not apply to p = {p}")

    param = None
    if family == "char2":
        if a % 4 == 2:
            family, curve = "char2_basic", CurveSpec(F, a3=1)
        else:
            image = {F.add(F.mul(b, b), b) for b in range(F.q)}
            param = next(g for g in range(F.q) if g not in image)
            family, curve = "char2_twist", CurveSpec(F, a3=1, a6=param)
    elif family in ("char3_lemma214", "p3mod4_lemma214"):
        if a % 4 == 2:
            curve = CurveSpec(F, a4=1)
        else:
            param = _smallest_nonsquare(F)
            curve = CurveSpec(F, a4=F.mul(param, param))
    else:
        if a % 4 == 2:
            curve = CurveSpec(F, a6=1)
        else:
            param = _smallest_nonsquare(F)
            curve = CurveSpec(F, a6=F.pow(param, 3))

    expected = F.q + 1 + 2 * sqrt_q(F)
    found = point_count(curve)
    if found != expected:
        raise CatalogVerificationFailed(
            f"{family} curve over F_{F.q} has {found} points, expected {expected}")
    return CurveCatalogEntry(curve, family, param, expected)
