"""Dense linear algebra over F_q on numpy integer arrays of element encodings."""
from __future__ import annotations

import numpy as np

from .field import FieldSpec


def as_matrix(M) -> np.ndarray:
    A = np.array(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else A.reshape(0, 0)
    return A


def rref(F: FieldSpec, M) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    A = as_matrix(M).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = F.vmul(A[r], F.inv(int(A[r, c])))
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            factors = A[others, c][:, None]
            A[others] = F.vsub(A[others], F.vmul(factors, A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def rank(F: FieldSpec, M) -> int:
    A = as_matrix(M)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def nullspace(F: FieldSpec, M, ncols: int | None = None) -> np.ndarray:
    """Rows form a basis of {v : M v = 0}, one basis vector per free column."""
    A = as_matrix(M)
    if A.size == 0:
        n = ncols if ncols is not None else A.shape[1]
        return np.eye(n, dtype=np.int64)
    R, pivots = rref(F, A)
    n = R.shape[1]
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = F.neg(int(R[i, fc]))
    return basis


def solve(F: FieldSpec, A, b) -> np.ndarray | None:
    """Some x with A x = b, or None if the system is inconsistent."""
    A = as_matrix(A)
    b = np.asarray(b, dtype=np.int64).reshape(-1, 1)
    aug = np.hstack([A, b])
    R, pivots = rref(F, aug)
    n = A.shape[1]
    if n in pivots:
        return None
    x = np.zeros(n, dtype=np.int64)
    for i, pc in enumerate(pivots):
        x[pc] = R[i, n]
    return x


def det(F: FieldSpec, M) -> int:
    A = as_matrix(M).copy()
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("determinant of a non-square matrix")
    d = 1
    for c in range(n):
        nz = np.nonzero(A[c:, c])[0]
        if nz.size == 0:
            return 0
        piv = c + int(nz[0])
        if piv != c:
            A[[c, piv]] = A[[piv, c]]
            d = F.neg(d)
        pv = int(A[c, c])
        d = F.mul(d, pv)
        below = np.arange(c + 1, n)
        if below.size:
            factors = F.vmul(A[below, c], F.inv(pv))[:, None]
            A[below] = F.vsub(A[below], F.vmul(factors, A[c][None, :]))
    return d


def matmul(F: FieldSpec, A, B) -> np.ndarray:
    A = as_matrix(A)
    B = as_matrix(B)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for j in range(A.shape[1]):
        out = F.vadd(out, F.vmul(A[:, j][:, None], B[j][None, :]))
    return out
