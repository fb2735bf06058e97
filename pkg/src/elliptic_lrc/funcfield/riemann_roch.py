"""Bases of Riemann-Roch spaces L(D) for effective divisors with rational support."""
from __future__ import annotations

from ..curve import INFINITY, CurveSpec, Point, point_add, point_neg, scalar_mul
from ..errors import DimensionMismatch, NotFound, NotInvariant, NotSplit
from ..gf import linalg
from ..gf import poly as P_
from .divisor import DivisorSpec
from .function import CurveFunction, apply_automorphism, linear_combination
from .series import laurent, local_expansion, principal_divisor, s_mul


def monomial_exponents(m: int) -> list[tuple[int, int]]:
    """(i, j) with j <= 1 and 2i + 3j <= m, ordered by pole order at O."""
    if m <= 1:
        return [(0, 0)]
    out = [(i, j) for j in (0, 1) for i in range(m // 2 + 1) if 2 * i + 3 * j <= m]
    return sorted(out, key=lambda ij: 2 * ij[0] + 3 * ij[1])


def rr_basis_pole_at_O(curve: CurveSpec, m: int) -> list[CurveFunction]:
    return [CurveFunction.monomial(curve, i, j) for i, j in monomial_exponents(m)]


def _monomial_series(curve: CurveSpec, P: Point, exps, prec: int) -> list[list[int]]:
    F = curve.field
    X, Y, _ = local_expansion(curve, P, max(prec, 3))
    X, Y = list(X[:prec]), list(Y[:prec])
    top = max(i for i, _ in exps)
    powers = [[1] + [0] * (prec - 1)]
    for _ in range(top):
        powers.append(s_mul(F, powers[-1], X, prec))
    return [powers[i] if j == 0 else s_mul(F, powers[i], Y, prec) for i, j in exps]


def _vanishing_rows(curve: CurveSpec, exps, conditions) -> list[list[int]]:
    """Rows expressing v_P(sum c_ij x^i y^j) >= n for each (P, n)."""
    rows = []
    for P, n in conditions:
        if n <= 0:
            continue
        series = _monomial_series(curve, P, exps, n)
        rows.extend([s[c] for s in series] for c in range(n))
    return rows


def _functions_from(curve: CurveSpec, exps, vectors) -> list[CurveFunction]:
    monos = [CurveFunction.monomial(curve, i, j) for i, j in exps]
    return [linear_combination(monos, [int(c) for c in v]) for v in vectors]


def divisor_sum(curve: CurveSpec, D: DivisorSpec) -> Point:
    """Sum in the group law of n_P * P over the affine support."""
    acc = INFINITY
    for P, n in D.items():
        if not P.is_infinity:
            acc = point_add(curve, acc, scalar_mul(curve, n, P))
    return acc


def rr_basis(curve: CurveSpec, D: DivisorSpec | dict) -> list[CurveFunction]:
    """A basis of L(D) with exactly deg D elements."""
    D = DivisorSpec(D)
    if not D.is_effective or D.degree < 1:
        raise ValueError("rr_basis needs an effective divisor of positive degree")
    F = curve.field
    k = D.degree
    affine = [(P, n) for P, n in D.items() if not P.is_infinity]
    k_aff = sum(n for _, n in affine)
    if k_aff == 0:
        return rr_basis_pole_at_O(curve, k)

    Q = point_neg(curve, divisor_sum(curve, D))
    m_h = k_aff if Q.is_infinity else k_aff + 1
    exps_h = monomial_exponents(m_h)
    ns = linalg.nullspace(F, _vanishing_rows(curve, exps_h, affine), len(exps_h))
    if len(ns) != 1:
        raise DimensionMismatch(f"denominator space has dimension {len(ns)}, expected 1")
    h = _functions_from(curve, exps_h, ns)[0]

    if Q.is_infinity:
        numerators = rr_basis_pole_at_O(curve, k)
    else:
        exps_g = monomial_exponents(k + 1)
        ns = linalg.nullspace(F, _vanishing_rows(curve, exps_g, [(Q, 1)]), len(exps_g))
        numerators = _functions_from(curve, exps_g, ns)
    basis = [g / h for g in numerators]
    if len(basis) != k:
        raise DimensionMismatch(f"computed dim L(D) = {len(basis)}, deg D = {k}")
    return basis


def residue_row(f: CurveFunction, points) -> list[int]:
    """Coefficient of pi^-1 of f at each point (0 where f is regular)."""
    out = []
    for P in points:
        v, c = laurent(f, P, 1)
        if v < -1:
            raise ValueError(f"{f} has a pole of order {-v} at {P}")
        out.append(c[0] if v == -1 else 0)
    return out


def function_with_exact_poles(curve: CurveSpec, prefix) -> CurveFunction:
    """Some w in L(P_1 + ... + P_m) with a simple pole at every P_j.

    Coefficients are fixed greedily, basis element by basis element, taking the
    smallest field element that keeps every nonzero pole coefficient nonzero.
    """
    prefix = list(prefix)
    if len(prefix) < 2 or len(set(prefix)) != len(prefix) or any(P.is_infinity for P in prefix):
        raise ValueError("prefix must hold at least two distinct affine points")
    F = curve.field
    basis = rr_basis(curve, DivisorSpec({P: 1 for P in prefix}))
    rows = [residue_row(b, prefix) for b in basis]
    acc = [0] * len(prefix)
    coeffs = []
    for row in rows:
        for lam in range(F.q):
            new = [F.add(a, F.mul(lam, r)) for a, r in zip(acc, row)]
            if all(nv or not (a or r) for nv, a, r in zip(new, acc, row)):
                break
        else:  # pragma: no cover - q >= 2 always leaves a choice
            raise NotFound("no admissible coefficient")
        acc = new
        coeffs.append(lam)
    if not all(acc):
        raise NotFound(f"no function with simple poles exactly at {prefix}")
    return linear_combination(basis, coeffs)


def invariant_z(G, P: Point) -> CurveFunction:
    """z = 1 / prod (sigma(x) - x_P) over the distinct x-actions of G."""
    from ..autgroup import orbit

    curve = G.curve
    F = curve.field
    if P.is_infinity:
        raise NotSplit("O is fixed by every automorphism")
    orb = orbit(G, P)
    if len(orb) != G.order:
        raise NotSplit(f"orbit of {P} has size {len(orb)}, not {G.order}")
    xs = G.x_actions()
    if 2 * len(xs) != G.order:
        raise NotSplit("subgroup does not act with half-size x-orbits")
    h = P_.ONE
    for A, B in xs:
        h = P_.mul(F, h, P_.trim((F.sub(B, P.x), A)))
    z = CurveFunction.make(curve, P_.ONE, (), h)
    for sigma in G:
        if apply_automorphism(sigma, z) != z:
            raise NotInvariant(f"{sigma} does not fix z")
    expected = DivisorSpec({INFINITY: G.order, **{Q: -1 for Q in orb}})
    if principal_divisor(z) != expected:
        raise NotInvariant("z does not have the expected divisor")
    return z


def is_invariant(G, f: CurveFunction) -> bool:
    return all(apply_automorphism(sigma, f) == f for sigma in G)


def cubic_invariant(G) -> CurveFunction:
    """A G-invariant function with pole divisor 3O; y itself when possible."""
    curve = G.curve
    F = curve.field
    y = CurveFunction.y(curve)
    if is_invariant(G, y):
        return y
    x = CurveFunction.x(curve)
    for c0 in range(F.q):
        for c1 in range(F.q):
            f = y + x.scale(c1) + CurveFunction.constant(curve, c0)
            if is_invariant(G, f):
                return f
    raise NotInvariant("no invariant function with pole divisor 3O")

