"""Independent certification of locality, distance and optimality."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import MissingProvenance, RangeError
from .gf import linalg
from .lrc import LrcCode, submatrices_invertible

DEFAULT_CAP = 2 ** 20
LITERAL_LOCALITY_CAP = 2 ** 16


class _Skipped:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "Skipped"


Skipped = _Skipped()


def singleton_type_bound(n: int, k: int, r: int) -> int:
    """n - k - ceil(k/r) + 2."""
    if not (1 <= k <= n and r >= 1):
        raise RangeError(f"need 1 <= k <= n and r >= 1, got n={n}, k={k}, r={r}")
    return n - k - math.ceil(k / r) + 2


def rate_bound_check(n: int, k: int, r: int) -> bool:
    return k * (r + 1) <= r * n


def _literal_locality(code: LrcCode) -> bool:
    """Project every codeword onto I u {i}; c_I must determine c_i."""
    from .lrc import encode_many

    F = code.field
    words = encode_many(code, _all_messages(F.q, code.k, 0, F.q ** code.k))
    for group in code.repair_groups:
        for i in group:
            helpers = [j for j in group if j != i]
            key = np.zeros(words.shape[0], dtype=np.int64)
            for j in helpers:
                key = key * F.q + words[:, j]
            pairs = key * F.q + words[:, i]
            if np.unique(key).size != np.unique(pairs).size:
                return False
    return True


def check_locality(code: LrcCode, literal: bool | None = None) -> bool:
    """Each column must lie in the span of the other columns of its repair group."""
    F = code.field
    covered = sorted(i for g in code.repair_groups for i in g)
    if covered != list(range(code.n)):
        return False
    G = code.generator
    for group in code.repair_groups:
        for i in group:
            helpers = [j for j in group if j != i]
            if linalg.rank(F, G[:, helpers]) != linalg.rank(F, G[:, list(group)]):
                return False
    if literal is None:
        literal = F.q ** code.k <= LITERAL_LOCALITY_CAP
    return _literal_locality(code) if literal else True


def check_submatrix_condition(code: LrcCode) -> bool:
    prov = code.provenance
    if prov is None or not prov.local_matrices:
        raise MissingProvenance("code carries no per-fiber function matrices")
    return all(submatrices_invertible(code.field, np.asarray(M)) for M in prov.local_matrices)


def _all_messages(q: int, k: int, start: int, stop: int) -> np.ndarray:
    """Messages start..stop-1 in lexicographic order, most significant symbol first."""
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.empty((idx.size, k), dtype=np.int64)
    for c in range(k - 1, -1, -1):
        out[:, c] = idx % q
        idx //= q
    return out


def exhaustive_min_distance(code: LrcCode, cap: int = DEFAULT_CAP, chunk: int = 1 << 15):
    """Minimum weight over every nonzero codeword, or Skipped when q^k > cap."""
    from .lrc import encode_many

    q, k = code.field.q, code.k
    total = q ** k
    if total > cap:
        return Skipped
    best = code.n
    for start in range(1, total, chunk):
        words = encode_many(code, _all_messages(q, k, start, min(total, start + chunk)))
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
        if best == 0:
            break
    return best


@dataclass(frozen=True)
class VerificationReport:
    n: int
    k_actual: int
    d_exhaustive: object
    d_design: int
    singleton_bound: int
    rate_ok: bool
    locality_ok: bool
    submatrix_ok: bool
    optimal: bool
    work_bound: int

    def to_dict(self) -> dict:
        out = asdict(self)
        if self.d_exhaustive is Skipped:
            out["d_exhaustive"] = "Skipped"
        return out


def certify(code: LrcCode, cap: int = DEFAULT_CAP) -> VerificationReport:
    F = code.field
    k = linalg.rank(F, code.generator)
    r = code.r
    bound = singleton_type_bound(code.n, max(k, 1), r)
    d_ex = exhaustive_min_distance(code, cap)
    work = F.q ** code.k - 1 if d_ex is not Skipped else 0
    locality_ok = check_locality(code)
    try:
        sub_ok = check_submatrix_condition(code)
    except MissingProvenance:
        sub_ok = False
    design_ok = k == code.k and code.d == bound
    if d_ex is not Skipped:
        design_ok = design_ok and code.d <= d_ex == bound
    optimal = design_ok and locality_ok and sub_ok
    return VerificationReport(code.n, k, d_ex, code.d, bound, rate_bound_check(code.n, k, r),
                              locality_ok, sub_ok, optimal, work)
