"""Local power series at rational points, valuations, evaluation and divisors.

At an affine point P = (a, b) the uniformizer is x - a when the vertical line
through P meets the curve in two distinct points, and y - b otherwise.  In the
second case v_P(x - a) = 2.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..curve import INFINITY, CurveSpec, Point, points_by_x
from ..errors import NonRationalSupport, PointNotOnCurve, ZeroFunction
from ..gf import poly as P_
from ..gf.field import FieldSpec
from .divisor import DivisorSpec
from .function import CurveFunction


class Pole:
    """Result of evaluating a function at one of its poles."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "POLE"


POLE = Pole()


# ------------------------------------------------------------ series helpers

def s_mul(F: FieldSpec, A, B, prec: int) -> list[int]:
    out = [0] * prec
    for i, ai in enumerate(A[:prec]):
        if ai:
            for j in range(min(len(B), prec - i)):
                if B[j]:
                    out[i + j] = F.add(out[i + j], F.mul(ai, B[j]))
    return out


def s_add(F: FieldSpec, A, B) -> list[int]:
    n = max(len(A), len(B))
    A = list(A) + [0] * (n - len(A))
    B = list(B) + [0] * (n - len(B))
    return [F.add(x, y) for x, y in zip(A, B)]


def s_scale(F: FieldSpec, c: int, A) -> list[int]:
    return [F.mul(c, x) for x in A]


def poly_at_series(F: FieldSpec, f, X, prec: int) -> list[int]:
    acc = [0] * prec
    for c in reversed(f):
        acc = s_mul(F, acc, X, prec)
        acc[0] = F.add(acc[0], c)
    return acc


def s_div(F: FieldSpec, A, B, terms: int) -> list[int]:
    """A / B for series with B[0] != 0, first ``terms`` coefficients."""
    inv0 = F.inv(B[0])
    out = []
    for k in range(terms):
        acc = A[k] if k < len(A) else 0
        for j in range(1, min(k, len(B) - 1) + 1):
            acc = F.sub(acc, F.mul(B[j], out[k - j]))
        out.append(F.mul(acc, inv0))
    return out


def order(A) -> int | None:
    return next((i for i, c in enumerate(A) if c), None)


# ---------------------------------------------------------- local expansions

def _partials(curve: CurveSpec, P: Point) -> tuple[int, int]:
    F = curve.field
    a, b = P.x, P.y
    a1, a2, a3, a4, _ = curve.coefficients
    wy = F.add(F.add(F.add(b, b), F.mul(a1, a)), a3)
    dfx = F.add(F.add(F.mul(F.from_int(3), F.mul(a, a)), F.mul(F.from_int(2), F.mul(a2, a))), a4)
    wx = F.sub(F.mul(a1, b), dfx)
    return wx, wy


def ramification_index(curve: CurveSpec, P: Point) -> int:
    """v_P(x - x_P): 1 if x - x_P is a uniformizer at P, else 2."""
    return 1 if _partials(curve, P)[1] else 2


@lru_cache(maxsize=4096)
def local_expansion(curve: CurveSpec, P: Point, prec: int) -> tuple[tuple[int, ...], tuple[int, ...], int]:
    """Series (X, Y) of x and y in the uniformizer at affine P, and e = v_P(x - x_P)."""
    if P.is_infinity or not curve.contains(P):
        raise PointNotOnCurve(f"{P} is not an affine point of {curve}")
    F = curve.field
    a, b = P.x, P.y
    a1 = curve.a1
    wx, wy = _partials(curve, P)
    cubic = P_.trim((curve.a6, curve.a4, curve.a2, 1))
    shifted = P_.taylor_shift(F, cubic, a)

    if wy:
        Fk = list(shifted) + [0] * prec
        c = [b]
        inv = F.inv(wy)
        for k in range(1, prec):
            acc = F.sub(Fk[k], F.mul(a1, c[k - 1]))
            for i in range(1, k):
                acc = F.sub(acc, F.mul(c[i], c[k - i]))
            c.append(F.mul(acc, inv))
        X = [a, 1] + [0] * (prec - 2)
        return tuple(X[:prec]), tuple(c), 1

    # uniformizer y - b; solve W(a + xi, b + pi) = 0 for xi by fixed-point iteration
    Y = ([b, 1] + [0] * prec)[:prec]
    inv = F.inv(wx)
    xi = [0] * prec
    for _ in range(prec + 1):
        X = s_add(F, [a], xi)
        W = s_mul(F, Y, Y, prec)
        W = s_add(F, W, s_mul(F, s_add(F, s_scale(F, a1, X), [curve.a3]), Y, prec))
        W = [F.sub(w, v) for w, v in zip(W, poly_at_series(F, shifted, xi, prec))]
        nxt = [F.sub(x, F.mul(w, inv)) for x, w in zip(xi, W)]
        if nxt == xi:
            break
        xi = nxt
    X = s_add(F, [a], xi)
    return tuple(X), tuple(Y), 2


def numerator_series(f: CurveFunction, P: Point, prec: int) -> list[int]:
    F = f.field
    X, Y, _ = local_expansion(f.curve, P, prec)
    return s_add(F, poly_at_series(F, f.g0, X, prec),
                 s_mul(F, poly_at_series(F, f.g1, X, prec), list(Y), prec))


def laurent(f: CurveFunction, P: Point, terms: int = 1) -> tuple[int, list[int]]:
    """(v, [c_v, c_{v+1}, ...]) with f = sum c_i pi^i at affine P."""
    if f.is_zero:
        raise ZeroFunction("the zero function has no Laurent expansion")
    F = f.field
    e = ramification_index(f.curve, P)
    mn = P_.root_multiplicity(F, f.norm(), P.x)
    mh = P_.root_multiplicity(F, f.h, P.x)
    prec = e * max(mn, mh) + terms + 2
    X, _, _ = local_expansion(f.curve, P, prec)
    num = numerator_series(f, P, prec)
    den = poly_at_series(F, f.h, X, prec)
    on, od = order(num), order(den)
    if on is None or od is None:  # pragma: no cover - precision is provably enough
        raise ArithmeticError("insufficient local precision")
    return on - od, s_div(F, num[on:], den[od:], terms)


# ------------------------------------------------------ valuations and values

def valuation(f: CurveFunction, P: Point) -> int:
    if f.is_zero:
        raise ZeroFunction("valuation of the zero function")
    if P.is_infinity:
        cands = []
        if f.g0:
            cands.append(-2 * P_.deg(f.g0))
        if f.g1:
            cands.append(-3 - 2 * P_.deg(f.g1))
        return min(cands) + 2 * P_.deg(f.h)
    F = f.field
    if P_.evaluate(F, f.h, P.x) and P_.evaluate(F, f.norm(), P.x):
        return 0
    return laurent(f, P, 1)[0]


def evaluate(f: CurveFunction, P: Point):
    """f(P) as an element encoding, or POLE."""
    F = f.field
    if f.is_zero:
        return 0
    if P.is_infinity:
        v = valuation(f, P)
        if v:
            return 0 if v > 0 else POLE
        return P_.lead(f.g0)
    if not f.curve.contains(P):
        raise PointNotOnCurve(f"{P} is not on {f.curve}")
    hv = P_.evaluate(F, f.h, P.x)
    if hv:
        num = F.add(P_.evaluate(F, f.g0, P.x), F.mul(P_.evaluate(F, f.g1, P.x), P.y))
        return F.div(num, hv)
    v, c = laurent(f, P, 1)
    if v:
        return 0 if v > 0 else POLE
    return c[0]


def _rational_roots(F: FieldSpec, f) -> list[int]:
    rs = P_.roots(F, f)
    if sum(m for _, m in rs) != P_.deg(f):
        raise NonRationalSupport("a zero or pole lies over a non-rational x-coordinate")
    return [r for r, _ in rs]


def principal_divisor(f: CurveFunction) -> DivisorSpec:
    if f.is_zero:
        raise ZeroFunction("the zero function has no divisor")
    F = f.field
    xs = sorted(set(_rational_roots(F, f.norm())) | set(_rational_roots(F, f.h)))
    fibre = points_by_x(f.curve)
    out = {INFINITY: valuation(f, INFINITY)}
    for a in xs:
        pts = fibre.get(a)
        if not pts:
            raise NonRationalSupport(f"no rational point above x = {a}")
        for P in pts:
            out[P] = valuation(f, P)
    D = DivisorSpec(out)
    if D.degree != 0:  # pragma: no cover - would mean a place of degree 2 was missed
        raise NonRationalSupport(f"divisor {D} has degree {D.degree}")
    return D


def evaluate_many(f: CurveFunction, points) -> np.ndarray:
    """Values of f at affine points; raises ValueError if f has a pole among them."""
    F = f.field
    pts = list(points)
    xs = np.array([P.x for P in pts], dtype=np.int64)
    ys = np.array([P.y for P in pts], dtype=np.int64)
    if f.is_zero or not pts:
        return np.zeros(len(pts), dtype=np.int64)
    hv = F.vpoly(f.h, xs)
    num = F.vadd(F.vpoly(f.g0, xs), F.vmul(F.vpoly(f.g1, xs), ys))
    safe = hv != 0
    out = np.zeros(len(pts), dtype=np.int64)
    out[safe] = F.vmul(num[safe], F.vinv(hv[safe]))
    for idx in np.nonzero(~safe)[0]:
        v = evaluate(f, pts[idx])
        if v is POLE:
            raise ValueError(f"{f} has a pole at {pts[idx]}")
        out[idx] = v
    return out
