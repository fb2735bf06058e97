import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from elliptic_lrc.errors import DegenerateAllZero, DivisionByZero, MixedFields, NotPrime, TooLarge
from elliptic_lrc.gf import (
    FieldElement,
    field_arith,
    field_create,
    field_of_order,
    linalg,
    roots_of_unity,
    solve_univariate_quadratic,
    unity_roots,
)
from elliptic_lrc.gf import poly as P
from elliptic_lrc.gf.field import smallest_irreducible

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81, 729, 4096]


def elems(q):
    return st.integers(min_value=0, max_value=q - 1)


# ----------------------------------------------------------- F_4 by hand

def test_f4_multiplication_table(F4):
    # alpha = 2 is a root of x^2 + x + 1, so alpha^2 = alpha + 1 = 3
    assert F4.modulus == (1, 1, 1)
    assert F4.mul(2, 2) == 3
    assert F4.mul(2, 3) == 1
    assert F4.mul(3, 3) == 2
    assert F4.add(2, 3) == 1
    assert F4.inv(2) == 3


def test_f9_modulus_and_i_squared():
    F = field_of_order(9)
    assert F.modulus == (1, 0, 1)
    i = F.from_coeffs([0, 1])
    assert F.mul(i, i) == F.neg(1)


def test_smallest_irreducible_is_first_in_order():
    # lowest-order coefficients first; first irreducible in lexicographic order
    assert smallest_irreducible(2, 3) == (1, 0, 1, 1)
    assert smallest_irreducible(2, 6) == (1, 0, 0, 0, 0, 1, 1)
    assert smallest_irreducible(7, 2) == (1, 0, 1)


# ---------------------------------------------------------------- axioms

@pytest.mark.parametrize("q", [4, 9, 25, 27])
def test_field_axioms_exhaustive(q):
    F = field_of_order(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
        if b:
            assert F.mul(F.div(a, b), b) == a


@pytest.mark.parametrize("q", ORDERS)
def test_field_axioms_random(q, rng):
    F = field_of_order(q)
    for _ in range(300):
        a, b, c = (rng.randrange(q) for _ in range(3))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1


@given(st.sampled_from(ORDERS).flatmap(lambda q: st.tuples(st.just(q), elems(q), elems(q))))
def test_frobenius_is_additive_and_multiplicative(args):
    q, a, b = args
    F = field_of_order(q)
    fr = lambda v: F.pow(v, F.p)
    assert fr(F.add(a, b)) == F.add(fr(a), fr(b))
    assert fr(F.mul(a, b)) == F.mul(fr(a), fr(b))


@pytest.mark.parametrize("q", ORDERS)
def test_frobenius_fixed_field_and_fermat(q):
    F = field_of_order(q)
    fixed = [v for v in range(q) if F.pow(v, F.p) == v]
    assert fixed == list(range(F.p))  # prime subfield, integer encodings 0..p-1
    assert all(F.pow(v, q) == v for v in range(0, q, max(1, q // 64)))


@pytest.mark.parametrize("q", ORDERS)
def test_generator_has_full_order(q):
    F = field_of_order(q)
    g = F.generator
    assert len({F.pow(g, e) for e in range(q - 1)}) == q - 1


def test_vector_ops_match_scalar(field, rng):
    F = field
    x = np.array([rng.randrange(F.q) for _ in range(200)])
    y = np.array([rng.randrange(F.q) for _ in range(200)])
    assert list(F.vadd(x, y)) == [F.add(a, b) for a, b in zip(x, y)]
    assert list(F.vsub(x, y)) == [F.sub(a, b) for a, b in zip(x, y)]
    assert list(F.vmul(x, y)) == [F.mul(a, b) for a, b in zip(x, y)]
    nz = x[x != 0]
    assert list(F.vinv(nz)) == [F.inv(int(a)) for a in nz]


# ---------------------------------------------------------------- errors

def test_errors():
    with pytest.raises(NotPrime):
        field_create(6, 1)
    with pytest.raises(NotPrime):
        field_of_order(12)
    with pytest.raises(TooLarge):
        field_create(2, 40)
    F = field_of_order(4)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.div(1, 0)
    with pytest.raises(DegenerateAllZero):
        F.quadratic_roots(0, 0, 0)
    with pytest.raises(MixedFields):
        FieldElement(F, 1) + FieldElement(field_of_order(9), 1)


def test_element_wrapper_and_field_arith(F4):
    a = F4.element(2)
    assert (a * a).value == 3
    assert (a + 1).value == 3
    assert (1 / a).value == 3
    assert a.coeffs == (0, 1)
    assert field_arith("mul", a, a) == F4.element(3)
    assert field_arith("inv", a) == F4.element(3)


def test_quadratic_roots_and_unity(F4):
    # y^2 + y = 1 has roots alpha, alpha+1 over F_4
    assert solve_univariate_quadratic(*(F4.element(1) for _ in range(3))) == {F4.element(2), F4.element(3)}
    assert sorted(unity_roots(F4, 3)) == [1, 2, 3]
    assert len(roots_of_unity(field_of_order(49), 4)) == 4
    assert len(roots_of_unity(field_of_order(25), 6)) == 6


@pytest.mark.parametrize("q", ORDERS)
def test_serialization_roundtrip(q):
    F = field_of_order(q)
    assert type(F).from_dict(F.to_dict()) == F
    for v in range(0, q, max(1, q // 50)):
        assert F.from_coeffs(F.to_coeffs(v)) == v


# ----------------------------------------------------------- polynomials

def test_poly_division_and_gcd(rng):
    F = field_of_order(9)
    for _ in range(100):
        f = P.trim([rng.randrange(9) for _ in range(rng.randrange(1, 7))])
        g = P.trim([rng.randrange(9) for _ in range(rng.randrange(1, 5))])
        if not g:
            continue
        qt, r = P.divmod_(F, f, g)
        assert P.add(F, P.mul(F, qt, g), r) == f
        assert P.deg(r) < P.deg(g)
        d = P.gcd(F, f, g)
        assert not P.divmod_(F, g, d)[1]


def test_poly_roots_and_composition(F4):
    f = P.mul(F4, (1, 1), (2, 1))  # (x+1)(x+alpha)
    assert sorted(P.roots(F4, f)) == [(1, 1), (2, 1)]
    g = P.compose_linear(F4, f, 2, 1)
    for x in range(4):
        assert P.evaluate(F4, g, x) == P.evaluate(F4, f, F4.add(F4.mul(2, x), 1))
    assert P.root_multiplicity(F4, P.power(F4, (1, 1), 3), 1) == 3


# ---------------------------------------------------------------- linalg

def test_linalg_rank_nullspace_solve(rng):
    F = field_of_order(16)
    for _ in range(30):
        M = np.array([[rng.randrange(16) for _ in range(6)] for _ in range(4)])
        N = linalg.nullspace(F, M)
        assert linalg.rank(F, M) + len(N) == 6
        for v in N:
            assert not linalg.matmul(F, M, v.reshape(-1, 1)).any()
        x = np.array([rng.randrange(16) for _ in range(6)])
        b = linalg.matmul(F, M, x.reshape(-1, 1)).ravel()
        sol = linalg.solve(F, M, b)
        assert (linalg.matmul(F, M, sol.reshape(-1, 1)).ravel() == b).all()


def test_det_of_vandermonde_is_nonzero():
    F = field_of_order(25)
    pts = [1, 2, 7, 13]
    V = [[F.pow(p, e) for e in range(4)] for p in pts]
    assert linalg.det(F, V) != 0
    V[3] = V[0]
    assert linalg.det(F, V) == 0
