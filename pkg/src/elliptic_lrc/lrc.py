"""Locally repairable evaluation codes on maximal elliptic curves.

Two constructions are provided.  ``build_locality2`` evaluates
{1, z, ..., z^t, x, xz, ..., xz^(t-1)} where z is invariant under an order-3
automorphism subgroup and has a triple pole at O.  ``build_general`` handles
odd locality r: z is invariant under a subgroup G of order r + 1 and has its
poles on one G-orbit, and the w_i have simple poles on prefixes of that orbit.
In both cases the repair groups are the G-orbits used as evaluation points.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .autgroup import Subgroup, enumerate_automorphisms, orbits, subgroups_of_order, subgroups_with_half_x_orbit
from .curve import CurveSpec, Point, enumerate_points, maximal_curve
from .errors import (
    LengthMismatch,
    NoQualifyingSubgroup,
    NotInvariant,
    NotRepairable,
    RangeError,
    SubmatrixSingular,
    UnsupportedCharacteristic,
)
from .funcfield import CurveFunction, cubic_invariant, evaluate_many, function_with_exact_poles, invariant_z
from .gf import linalg
from .gf.field import FieldSpec


@dataclass(frozen=True)
class EvaluationPlan:
    fibers: tuple[tuple[Point, ...], ...]
    excluded: tuple[Point, ...]

    @property
    def points(self) -> list[Point]:
        return [P for fib in self.fibers for P in fib]


@dataclass(frozen=True)
class Provenance:
    curve: CurveSpec
    family: str
    subgroup: Subgroup | None
    plan: EvaluationPlan
    pole_fiber: tuple[Point, ...]
    t: int
    ell: int
    z: CurveFunction | None
    local_functions: tuple[CurveFunction, ...]
    basis_labels: tuple[str, ...]
    local_matrices: tuple[np.ndarray, ...]


@dataclass
class LrcCode:
    field: FieldSpec
    n: int
    k: int
    r: int
    d: int
    generator: np.ndarray
    repair_groups: tuple[tuple[int, ...], ...]
    provenance: Provenance | None = None
    _repair_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        self.generator = np.array(self.generator, dtype=np.int64).reshape(self.k, self.n)
        self.generator.setflags(write=False)
        self.repair_groups = tuple(tuple(int(i) for i in g) for g in self.repair_groups)

    @property
    def params(self) -> tuple[int, int, int, int]:
        return (self.n, self.k, self.d, self.r)

    def group_of(self, i: int) -> tuple[int, ...]:
        for g in self.repair_groups:
            if i in g:
                return g
        raise NotRepairable(f"position {i} is in no repair group")

    def repair_coefficients(self, i: int) -> tuple[tuple[int, ...], np.ndarray]:
        """(helpers I, lambda) with column i = sum lambda_j column I_j."""
        if i not in self._repair_cache:
            if not 0 <= i < self.n:
                raise NotRepairable(f"position {i} outside 0..{self.n - 1}")
            helpers = tuple(j for j in self.group_of(i) if j != i)
            lam = linalg.solve(self.field, self.generator[:, helpers], self.generator[:, i])
            if lam is None:
                raise NotRepairable(f"column {i} is not spanned by its repair group")
            self._repair_cache[i] = (helpers, lam)
        return self._repair_cache[i]


# ---------------------------------------------------------------- utilities

def _fiber_matrix(F: FieldSpec, funcs, fiber) -> np.ndarray:
    """(r+1) x r matrix of local function values on one fiber; column 0 is the constant 1."""
    cols = [np.ones(len(fiber), dtype=np.int64)] + [evaluate_many(w, fiber) for w in funcs]
    return np.stack(cols, axis=1)


def submatrices_invertible(F: FieldSpec, M: np.ndarray) -> bool:
    rows, cols = M.shape
    return all(linalg.rank(F, np.delete(M, i, axis=0)) == cols for i in range(rows))


def _pick_fibers(fibers, ell: int, seed: int | None):
    fibers = list(fibers)
    if seed is not None:
        random.Random(seed).shuffle(fibers)
    return fibers[:ell]


def _powers(F: FieldSpec, v: np.ndarray, top: int) -> list[np.ndarray]:
    out = [np.ones_like(v)]
    for _ in range(top):
        out.append(F.vmul(out[-1], v))
    return out


def _assemble(F, rows, plan: EvaluationPlan, r: int, k: int, d: int, prov: Provenance) -> LrcCode:
    G = np.array(rows, dtype=np.int64)
    n = G.shape[1]
    if linalg.rank(F, G) != k:  # pragma: no cover - guarded by the valuation argument
        raise ArithmeticError(f"generator has rank {linalg.rank(F, G)}, expected {k}")
    groups = tuple(tuple(range(j * (r + 1), (j + 1) * (r + 1))) for j in range(len(plan.fibers)))
    return LrcCode(F, n, k, r, d, G, groups, prov)


# ---------------------------------------------------------------- locality 2

@dataclass(frozen=True)
class Locality2Setup:
    curve: CurveSpec
    family: str
    subgroup: Subgroup
    z: CurveFunction
    fibers: tuple[tuple[Point, ...], ...]
    ramified: tuple[Point, ...]


@lru_cache(maxsize=None)
def locality2_setup(F: FieldSpec) -> Locality2Setup:
    if not (F.p == 3 or F.p % 3 == 2):
        raise UnsupportedCharacteristic(f"locality 2 needs p = 3 or p = 2 mod 3, got p = {F.p}")
    entry = maximal_curve(F)
    full = enumerate_automorphisms(entry)
    for G in subgroups_of_order(full, 3):
        try:
            z = cubic_invariant(G)
        except NotInvariant:
            continue
        fibers, ramified = orbits(G, enumerate_points(entry.curve))
        return Locality2Setup(entry.curve, entry.family, G, z, tuple(fibers), tuple(ramified))
    raise NoQualifyingSubgroup(f"no order-3 subgroup with a cubic invariant over F_{F.q}")


def locality2_capacity(F: FieldSpec) -> int:
    return len(locality2_setup(F).fibers)


def build_locality2(F: FieldSpec, t: int, ell: int, seed: int | None = None) -> LrcCode:
    """[3 ell, 2t + 1, 3 ell - 3t] code with locality 2."""
    setup = locality2_setup(F)
    cap = len(setup.fibers)
    if not (0 <= t < ell <= cap):
        raise RangeError(f"need 0 <= t < ell <= {cap}, got t={t}, ell={ell}")
    plan = EvaluationPlan(tuple(_pick_fibers(setup.fibers, ell, seed)), setup.ramified)
    pts = plan.points
    x = CurveFunction.x(setup.curve)
    zv = evaluate_many(setup.z, pts)
    xv = evaluate_many(x, pts)
    zp = _powers(F, zv, t)
    rows = zp + [F.vmul(xv, zp[j]) for j in range(t)]
    labels = tuple([f"z^{j}" for j in range(t + 1)] + [f"x*z^{j}" for j in range(t)])
    mats = tuple(_fiber_matrix(F, [x], fib) for fib in plan.fibers)
    prov = Provenance(setup.curve, setup.family, setup.subgroup, plan, (), t, ell,
                      setup.z, (x,), labels, mats)
    n = 3 * ell
    return _assemble(F, rows, plan, 2, 2 * t + 1, n - 3 * t, prov)


# ------------------------------------------------------------ odd locality

@dataclass(frozen=True)
class GeneralSetup:
    curve: CurveSpec
    family: str
    subgroup: Subgroup
    z: CurveFunction
    w: tuple[CurveFunction, ...]
    pole_fiber: tuple[Point, ...]
    fibers: tuple[tuple[Point, ...], ...]
    ramified: tuple[Point, ...]


def qualifying_subgroups(F: FieldSpec, r: int) -> list[Subgroup]:
    entry = maximal_curve(F)
    return subgroups_with_half_x_orbit(enumerate_automorphisms(entry), r + 1)


@lru_cache(maxsize=None)
def general_setup(F: FieldSpec, r: int) -> GeneralSetup:
    if r < 1 or r % 2 == 0:
        raise RangeError(f"r must be odd and positive, got {r}")
    entry = maximal_curve(F)
    groups = qualifying_subgroups(F, r)
    if not groups:
        raise NoQualifyingSubgroup(
            f"no automorphism subgroup of order {r + 1} with {(r + 1) // 2} x-actions over F_{F.q}")
    G = groups[0]
    fibers, ramified = orbits(G, enumerate_points(entry.curve))
    if not fibers:
        raise RangeError(f"no unramified orbit of size {r + 1} over F_{F.q}")
    for idx, pole in enumerate(fibers):
        z = invariant_z(G, pole[0])
        w = tuple(function_with_exact_poles(entry.curve, pole[: i + 1]) for i in range(1, r))
        rest = tuple(fibers[:idx] + fibers[idx + 1:])
        if all(submatrices_invertible(F, _fiber_matrix(F, w, fib)) for fib in rest):
            return GeneralSetup(entry.curve, entry.family, G, z, w, pole, rest, tuple(ramified))
    raise SubmatrixSingular(f"every choice of pole fiber gives a singular local matrix (q={F.q}, r={r})")


def general_capacity(F: FieldSpec, r: int) -> int:
    try:
        return len(general_setup(F, r).fibers)
    except RangeError:
        if r < 1 or r % 2 == 0:
            raise
        return 0


def build_general(F: FieldSpec, r: int, t: int, ell: int, seed: int | None = None) -> LrcCode:
    """[(r+1) ell, rt - r + 1, (r+1)(ell - t + 1)] code with locality r."""
    setup = general_setup(F, r)
    cap = len(setup.fibers)
    if not (1 <= t < ell <= cap):
        raise RangeError(f"need 1 <= t < ell <= {cap}, got t={t}, ell={ell}")
    plan = EvaluationPlan(tuple(_pick_fibers(setup.fibers, ell, seed)),
                          tuple(sorted(setup.ramified + setup.pole_fiber)))
    pts = plan.points
    zp = _powers(F, evaluate_many(setup.z, pts), t - 1)
    rows = list(zp)
    labels = [f"z^{j}" for j in range(t)]
    for i, w in enumerate(setup.w, start=1):
        wv = evaluate_many(w, pts)
        for j in range(t - 1):
            rows.append(F.vmul(zp[j], wv))
            labels.append(f"z^{j}*w{i}")
    mats = tuple(_fiber_matrix(F, setup.w, fib) for fib in plan.fibers)
    prov = Provenance(setup.curve, setup.family, setup.subgroup, plan, setup.pole_fiber, t, ell,
                      setup.z, setup.w, tuple(labels), mats)
    n = (r + 1) * ell
    return _assemble(F, rows, plan, r, r * t - r + 1, n - (t - 1) * (r + 1), prov)


def build(F: FieldSpec, r: int, t: int, ell: int, seed: int | None = None) -> LrcCode:
    if r == 2:
        return build_locality2(F, t, ell, seed)
    return build_general(F, r, t, ell, seed)


def capacity(F: FieldSpec, r: int) -> int:
    return locality2_capacity(F) if r == 2 else general_capacity(F, r)


def basis_functions(code: LrcCode) -> list[CurveFunction]:
    """Symbolic basis of the evaluated space V, in generator row order."""
    prov = code.provenance
    if prov is None or prov.z is None:
        raise ValueError("code carries no construction functions")
    z = prov.z
    zs = [CurveFunction.constant(prov.curve, 1)]
    top = prov.t if code.r == 2 else prov.t - 1
    for _ in range(top):
        zs.append(zs[-1] * z)
    if code.r == 2:
        x = prov.local_functions[0]
        return zs + [x * zs[j] for j in range(prov.t)]
    return zs + [zs[j] * w for w in prov.local_functions for j in range(prov.t - 1)]


# --------------------------------------------------------- encode / repair

def encode(code: LrcCode, message) -> np.ndarray:
    m = np.asarray([int(v) for v in message], dtype=np.int64)
    if m.shape != (code.k,):
        raise LengthMismatch(f"message has {m.size} symbols, code dimension is {code.k}")
    return encode_many(code, m[None, :])[0]


def encode_many(code: LrcCode, messages) -> np.ndarray:
    """Rows of ``messages`` (m x k) times the generator."""
    F = code.field
    M = np.asarray(messages, dtype=np.int64)
    if M.ndim != 2 or M.shape[1] != code.k:
        raise LengthMismatch(f"messages must have {code.k} columns")
    out = np.zeros((M.shape[0], code.n), dtype=np.int64)
    for i in range(code.k):
        out = F.vadd(out, F.vmul(M[:, i][:, None], code.generator[i][None, :]))
    return out


def repair(code: LrcCode, word, i: int) -> int:
    """Recover coordinate i of a codeword from the rest of its repair group."""
    helpers, lam = code.repair_coefficients(i)
    F = code.field
    vals = [int(word[j]) for j in helpers]
    return F.dot([int(v) for v in lam], vals)


def repair_many(code: LrcCode, columns: np.ndarray, i: int) -> np.ndarray:
    """Vectorized repair: ``columns`` holds the helper coordinates, one column per helper."""
    helpers, lam = code.repair_coefficients(i)
    F = code.field
    cols = np.asarray(columns, dtype=np.int64)
    out = np.zeros(cols.shape[0], dtype=np.int64)
    for c, l in enumerate(lam):
        out = F.vadd(out, F.vmul(cols[:, c], np.int64(l)))
    return out
