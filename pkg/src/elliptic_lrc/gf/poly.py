"""Univariate polynomials over a FieldSpec.

A polynomial is a tuple of element encodings, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.
"""
from __future__ import annotations

from typing import Sequence

from ..errors import DivisionByZero
from .field import FieldSpec

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def trim(f: Sequence[int]) -> Poly:
    n = len(f)
    while n and f[n - 1] == 0:
        n -= 1
    return tuple(f[:n])


def deg(f: Poly) -> int:
    """Degree, with deg(0) = -1."""
    return len(f) - 1


def lead(f: Poly) -> int:
    return f[-1] if f else 0


def const(c: int) -> Poly:
    return (c,) if c else ()


def add(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = F.add(out[i], c)
    return trim(out)


def neg(F: FieldSpec, f: Poly) -> Poly:
    return tuple(F.neg(c) for c in f)


def sub(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    return add(F, f, neg(F, g))


def scale(F: FieldSpec, c: int, f: Poly) -> Poly:
    if c == 0:
        return ()
    return tuple(F.mul(c, x) for x in f)


def mul(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, fc in enumerate(f):
        if fc:
            for j, gc in enumerate(g):
                if gc:
                    out[i + j] = F.add(out[i + j], F.mul(fc, gc))
    return trim(out)


def power(F: FieldSpec, f: Poly, e: int) -> Poly:
    acc, base = ONE, f
    while e:
        if e & 1:
            acc = mul(F, acc, base)
        base = mul(F, base, base)
        e >>= 1
    return acc


def divmod_(F: FieldSpec, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise DivisionByZero("polynomial division by zero")
    rem = list(f)
    dg = len(g) - 1
    inv_lead = F.inv(g[-1])
    quot = [0] * max(len(f) - dg, 0)
    for d in range(len(rem) - 1, dg - 1, -1):
        c = rem[d]
        if c == 0:
            continue
        c = F.mul(c, inv_lead)
        quot[d - dg] = c
        for i, gc in enumerate(g):
            if gc:
                rem[d - dg + i] = F.sub(rem[d - dg + i], F.mul(c, gc))
    return trim(quot), trim(rem[:dg] if dg > 0 else [])


def monic(F: FieldSpec, f: Poly) -> Poly:
    if not f:
        return f
    return scale(F, F.inv(f[-1]), f)


def gcd(F: FieldSpec, f: Poly, g: Poly) -> Poly:
    """Monic gcd (zero if both are zero)."""
    while g:
        f, g = g, divmod_(F, f, g)[1]
    return monic(F, f)


def evaluate(F: FieldSpec, f: Poly, x: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = F.add(F.mul(acc, x), c)
    return acc


def compose_linear(F: FieldSpec, f: Poly, A: int, B: int) -> Poly:
    """f(A*X + B)."""
    lin = trim((B, A))
    acc: Poly = ()
    for c in reversed(f):
        acc = add(F, mul(F, acc, lin), const(c))
    return acc


def taylor_shift(F: FieldSpec, f: Poly, a: int) -> list[int]:
    """Coefficients of f(a + T) as a polynomial in T (untrimmed, same length as f)."""
    c = list(f)
    n = len(c)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            c[j] = F.add(c[j], F.mul(a, c[j + 1]))
    return c


def root_multiplicity(F: FieldSpec, f: Poly, a: int) -> int:
    """Multiplicity of a as a root of the nonzero polynomial f."""
    shifted = taylor_shift(F, f, a)
    m = 0
    while m < len(shifted) and shifted[m] == 0:
        m += 1
    return m


def roots(F: FieldSpec, f: Poly) -> list[tuple[int, int]]:
    """(root, multiplicity) pairs in F_q by exhaustive evaluation."""
    if len(f) <= 1:
        return []
    out = []
    for a in range(F.q):
        if evaluate(F, f, a) == 0:
            out.append((a, root_multiplicity(F, f, a)))
    return out
