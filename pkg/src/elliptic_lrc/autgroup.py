"""Automorphisms of the catalog curves, their group structure and orbits.

An automorphism is stored by its shape parameters and acts on the coordinate
functions by

    char2:       x -> u^2 x + s^2,  y -> u^3 y + u^2 s x + t
    char3:       x -> u^2 x + s,    y -> u^3 y
    large_char:  x -> u^2 x,        y -> u^3 y

The same formulas move points: sigma.P = (sigma(x)(P), sigma(y)(P)), so that
sigma(f)(P) = f(sigma.P) for every function f.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from .curve import INFINITY, CurveCatalogEntry, CurveSpec, Point
from .errors import PointNotOnCurve, ShapeMismatch, UnsupportedShape
from .gf.field import FieldSpec, unity_roots

SHAPES = ("char2", "char3", "large_char")


@dataclass(frozen=True)
class Automorphism:
    curve: CurveSpec = field(repr=False)
    shape: str
    u: int
    s: int = 0
    t: int = 0

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise UnsupportedShape(self.shape)
        if not preserves_curve(self.curve, self.action):
            raise ShapeMismatch(f"{self} does not preserve {self.curve}")

    @property
    def field(self) -> FieldSpec:
        return self.curve.field

    @property
    def action(self) -> tuple[int, int, int, int, int]:
        """(A, B, C, D, E) with sigma(x) = A x + B and sigma(y) = C y + D x + E."""
        F = self.field
        u2 = F.mul(self.u, self.u)
        u3 = F.mul(u2, self.u)
        if self.shape == "char2":
            return (u2, F.mul(self.s, self.s), u3, F.mul(u2, self.s), self.t)
        if self.shape == "char3":
            return (u2, self.s, u3, 0, 0)
        return (u2, 0, u3, 0, 0)

    @property
    def x_action(self) -> tuple[int, int]:
        A, B, *_ = self.action
        return (A, B)

    @property
    def key(self) -> tuple[int, int, int]:
        return (self.u, self.s, self.t)

    @property
    def is_identity(self) -> bool:
        return self.key == (1, 0, 0)

    def __repr__(self) -> str:
        return f"σ[{self.shape}](u={self.u}, s={self.s}, t={self.t})"

    def __call__(self, P: Point) -> Point:
        return apply_to_point(self, P)

    def to_dict(self) -> dict:
        F = self.field
        return {"shape": self.shape, "u": list(F.to_coeffs(self.u)),
                "s": list(F.to_coeffs(self.s)), "t": list(F.to_coeffs(self.t))}

    @classmethod
    def from_dict(cls, curve: CurveSpec, d: dict) -> "Automorphism":
        F = curve.field
        return cls(curve, d["shape"], F.from_coeffs(d["u"]), F.from_coeffs(d["s"]),
                   F.from_coeffs(d["t"]))


def _from_action(curve: CurveSpec, shape: str, action) -> Automorphism:
    F = curve.field
    A, B, C, D, E = action
    u = F.div(C, A)
    if shape == "char2":
        return Automorphism(curve, shape, u, F.div(D, A), E)
    if shape == "char3":
        return Automorphism(curve, shape, u, B)
    return Automorphism(curve, shape, u)


def preserves_curve(curve: CurveSpec, action) -> bool:
    """W(sigma x, sigma y) == c * W(x, y) for a nonzero constant c, as polynomials."""
    F = curve.field
    A, B, C, D, E = action
    if A == 0 or C == 0:
        return False

    def W(xpoly, ypoly):
        # bivariate polynomials as {(i, j): coeff}
        def pmul(f, g):
            out: dict = {}
            for (i1, j1), c1 in f.items():
                for (i2, j2), c2 in g.items():
                    k = (i1 + i2, j1 + j2)
                    out[k] = F.add(out.get(k, 0), F.mul(c1, c2))
            return out

        def padd(*fs):
            out: dict = {}
            for f in fs:
                for k, c in f.items():
                    out[k] = F.add(out.get(k, 0), c)
            return out

        def pscale(c, f):
            return {k: F.mul(c, v) for k, v in f.items()}

        x2 = pmul(xpoly, xpoly)
        x3 = pmul(x2, xpoly)
        lhs = padd(pmul(ypoly, ypoly), pscale(curve.a1, pmul(xpoly, ypoly)), pscale(curve.a3, ypoly))
        rhs = padd(x3, pscale(curve.a2, x2), pscale(curve.a4, xpoly), {(0, 0): curve.a6})
        diff = padd(lhs, pscale(F.neg(1), rhs))
        return {k: v for k, v in diff.items() if v}

    base = W({(1, 0): 1}, {(0, 1): 1})
    image = W({(1, 0): A, (0, 0): B}, {(0, 1): C, (1, 0): D, (0, 0): E})
    c = F.div(image.get((0, 2), 0), base[(0, 2)])
    if c == 0 or set(image) != set(base):
        return False
    return all(image[k] == F.mul(c, v) for k, v in base.items())


def compose(sigma: Automorphism, tau: Automorphism) -> Automorphism:
    """The field automorphism f -> sigma(tau(f))."""
    if sigma.shape != tau.shape or sigma.curve != tau.curve:
        raise ShapeMismatch("automorphisms of different shapes or curves")
    F = sigma.field
    m, ad = F.mul, F.add
    A1, B1, C1, D1, E1 = sigma.action
    A2, B2, C2, D2, E2 = tau.action
    action = (
        m(A1, A2),
        ad(m(A2, B1), B2),
        m(C1, C2),
        ad(m(C2, D1), m(D2, A1)),
        ad(ad(m(C2, E1), m(D2, B1)), E2),
    )
    return _from_action(sigma.curve, sigma.shape, action)


def inverse(sigma: Automorphism) -> Automorphism:
    F = sigma.field
    A, B, C, D, E = sigma.action
    A2 = F.inv(A)
    C2 = F.inv(C)
    B2 = F.neg(F.mul(A2, B))
    D2 = F.neg(F.mul(C2, F.mul(D, A2)))
    E2 = F.neg(F.add(F.mul(C2, E), F.mul(D2, B)))
    return _from_action(sigma.curve, sigma.shape, (A2, B2, C2, D2, E2))


def identity(curve: CurveSpec, shape: str) -> Automorphism:
    return Automorphism(curve, shape, 1, 0, 0)


def group_op(op: str, sigma: Automorphism, tau: Automorphism | None = None) -> Automorphism:
    if op == "compose":
        return compose(sigma, tau)
    if op == "inverse":
        return inverse(sigma)
    raise ValueError(f"unknown operation {op!r}")


def apply_to_point(sigma: Automorphism, P: Point) -> Point:
    """Substitute P into the action, so that sigma(f)(P) = f(sigma(P)).

    With this convention compose(sigma, tau) moves P to tau(sigma(P)).
    """
    curve = sigma.curve
    if not curve.contains(P):
        raise PointNotOnCurve(f"{P} is not on {curve}")
    if P.is_infinity:
        return P
    F = curve.field
    A, B, C, D, E = sigma.action
    x = F.add(F.mul(A, P.x), B)
    y = F.add(F.add(F.mul(C, P.y), F.mul(D, P.x)), E)
    return Point(x, y)


# ------------------------------------------------------------------ groups

@dataclass(frozen=True)
class Subgroup:
    elements: tuple[Automorphism, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def curve(self) -> CurveSpec:
        return self.elements[0].curve

    @property
    def shape(self) -> str:
        return self.elements[0].shape

    def x_actions(self) -> list[tuple[int, int]]:
        """Distinct x-actions (A, B) in first-occurrence order."""
        seen: dict = {}
        for g in self.elements:
            seen.setdefault(g.x_action, g)
        return list(seen)

    def x_representatives(self) -> list[Automorphism]:
        """One element per distinct x-action, identity first."""
        seen: dict = {}
        for g in self.elements:
            seen.setdefault(g.x_action, g)
        return list(seen.values())

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def to_list(self) -> list[dict]:
        return [g.to_dict() for g in self.elements]

    @classmethod
    def from_list(cls, curve: CurveSpec, items: list[dict]) -> "Subgroup":
        return cls(tuple(Automorphism.from_dict(curve, d) for d in items))


def _canonical(elements) -> Subgroup:
    els = sorted(elements, key=lambda g: g.key)
    ident = [g for g in els if g.is_identity]
    rest = [g for g in els if not g.is_identity]
    return Subgroup(tuple(ident + rest))


def curve_shape(curve: CurveSpec) -> str:
    F = curve.field
    a1, a2, a3, a4, a6 = curve.coefficients
    if F.p == 2 and a1 == 0 and a2 == 0 and a4 == 0 and a3 == 1:
        return "char2"
    if F.p == 3 and a1 == a2 == a3 == a6 == 0 and a4 != 0:
        return "char3"
    if F.p > 3 and a1 == a2 == a3 == 0 and (a4 == 0) != (a6 == 0):
        return "large_char"
    raise UnsupportedShape(f"{curve} is not of a supported shape")


@lru_cache(maxsize=32)
def _full_group(curve: CurveSpec) -> Subgroup:
    F = curve.field
    shape = curve_shape(curve)
    out = []
    if shape == "char2":
        if F.a % 2:
            raise UnsupportedShape("char2 automorphisms need F_4 inside F_q (a even)")
        for u in unity_roots(F, 3):
            for s in range(F.q):
                if F.pow(s, 4) != s:
                    continue
                s6 = F.pow(s, 6)
                for t in F.quadratic_roots(1, 1, s6):
                    out.append(Automorphism(curve, shape, u, s, t))
    elif shape == "char3":
        alpha = curve.a4
        for u in unity_roots(F, 4):
            for s in range(F.q):
                if F.add(F.pow(s, 3), F.mul(alpha, s)) == 0:
                    out.append(Automorphism(curve, shape, u, s))
    else:
        n = 4 if curve.a6 == 0 else 6
        for u in unity_roots(F, n):
            out.append(Automorphism(curve, shape, u))
    return _canonical(out)


def enumerate_automorphisms(entry: CurveCatalogEntry | CurveSpec) -> Subgroup:
    curve = entry.curve if isinstance(entry, CurveCatalogEntry) else entry
    return _full_group(curve)


@lru_cache(maxsize=32)
def cayley_table(full: Subgroup) -> tuple[tuple[int, ...], ...]:
    """table[i][j] = index of compose(full[i], full[j])."""
    index = {g.key: i for i, g in enumerate(full.elements)}
    return tuple(tuple(index[compose(a, b).key] for b in full.elements) for a in full.elements)


def _close(table, gens: set[int]) -> frozenset[int]:
    els = {0} | gens
    frontier = list(els)
    while frontier:
        a = frontier.pop()
        for b in list(els):
            for c in (table[a][b], table[b][a]):
                if c not in els:
                    els.add(c)
                    frontier.append(c)
    return frozenset(els)


def closure(full: Subgroup, generators) -> Subgroup:
    """Smallest subgroup of ``full`` containing the given automorphisms."""
    index = {g.key: i for i, g in enumerate(full.elements)}
    H = _close(cayley_table(full), {index[g.key] for g in generators})
    return _canonical(full.elements[i] for i in H)


@lru_cache(maxsize=32)
def all_subgroups(full: Subgroup) -> tuple[Subgroup, ...]:
    """Every subgroup, found by closing element subsets of size <= 3, in canonical order."""
    table = cayley_table(full)
    found: set[frozenset[int]] = set()
    nonid = range(1, full.order)
    for size in range(0, 4):
        for gens in itertools.combinations(nonid, size):
            found.add(_close(table, set(gens)))
    groups = [_canonical(full.elements[i] for i in H) for H in found]
    return tuple(sorted(groups, key=lambda H: (H.order, sorted(g.key for g in H))))


def subgroups_of_order(full: Subgroup, m: int) -> list[Subgroup]:
    return [H for H in all_subgroups(full) if H.order == m]


def subgroups_with_half_x_orbit(full: Subgroup, m: int) -> list[Subgroup]:
    """Subgroups of even order m whose x-action set has exactly m/2 elements."""
    if m % 2 or m > full.order:
        return []
    return [H for H in subgroups_of_order(full, m) if len(H.x_actions()) == m // 2]


def orbit(G: Subgroup, P: Point) -> list[Point]:
    return sorted({apply_to_point(g, P) for g in G})


def orbits(G: Subgroup, points) -> tuple[list[tuple[Point, ...]], list[Point]]:
    """(full-size orbits, points lying in shorter orbits); O always counts as ramified."""
    remaining = set(points)
    fibers, ramified = [], []
    for P in sorted(points):
        if P not in remaining:
            continue
        orb = orbit(G, P)
        remaining.difference_update(orb)
        if len(orb) == G.order and not P.is_infinity:
            fibers.append(tuple(orb))
        else:
            ramified.extend(orb)
    fibers.sort(key=lambda f: f[0].key)
    return fibers, sorted(ramified)
