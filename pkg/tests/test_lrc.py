import numpy as np
import pytest

from elliptic_lrc.curve import INFINITY, Point
from elliptic_lrc.errors import LengthMismatch, NoQualifyingSubgroup, NotRepairable, RangeError, UnsupportedCharacteristic
from elliptic_lrc.funcfield import apply_automorphism, valuation
from elliptic_lrc.gf import field_of_order, linalg
from elliptic_lrc.lrc import (
    basis_functions,
    build,
    build_general,
    build_locality2,
    encode,
    encode_many,
    general_capacity,
    locality2_capacity,
    repair,
)

F4 = field_of_order(4)
PAPER_ROWS = [[1, 1, 1, 1, 1, 1], [2, 2, 2, 3, 3, 3], [1, 2, 3, 1, 2, 3]]


def same_row_space(F, A, B):
    ra, rb = linalg.rank(F, A), linalg.rank(F, B)
    return ra == rb == linalg.rank(F, np.vstack([A, B]))


# ------------------------------------------------------------- locality 2

def test_golden_6_3_3_code():
    code = build_locality2(F4, 1, 2)
    assert code.params == (6, 3, 3, 2)
    assert same_row_space(F4, code.generator, PAPER_ROWS)
    assert code.repair_groups == ((0, 1, 2), (3, 4, 5))
    assert code.provenance.plan.fibers[0] == (Point(1, 2), Point(2, 2), Point(3, 2))


def test_golden_encoding_of_first_unit_vector():
    code = build_locality2(F4, 1, 2)
    assert list(encode(code, [1, 0, 0])) == [1, 1, 1, 1, 1, 1]


@pytest.mark.parametrize("q, cap", [(4, 2), (9, 5), (16, 8), (25, 11), (64, 26), (81, 33)])
def test_locality2_capacity(q, cap):
    assert locality2_capacity(field_of_order(q)) == cap


def test_locality2_ranges():
    with pytest.raises(RangeError):
        build_locality2(F4, 1, 3)
    with pytest.raises(RangeError):
        build_locality2(F4, 2, 2)
    with pytest.raises(UnsupportedCharacteristic):
        build_locality2(field_of_order(49), 1, 2)
    constants = build_locality2(field_of_order(9), 0, 3)
    assert constants.params == (9, 1, 9, 2)
    assert (constants.generator == 1).all()


# ---------------------------------------------------------- odd locality

@pytest.mark.parametrize("q, r, cap", [(16, 3, 5), (64, 3, 19), (49, 3, 14), (64, 5, 12), (81, 5, 15), (64, 7, 9)])
def test_general_capacity(q, r, cap):
    assert general_capacity(field_of_order(q), r) == cap


def test_q64_r3_parameters():
    code = build_general(field_of_order(64), 3, 2, 19)
    assert code.params == (76, 4, 76 - 4, 3)


def test_r11_needs_characteristic_3():
    with pytest.raises(NoQualifyingSubgroup):
        build_general(field_of_order(64), 11, 2, 3)
    code = build_general(field_of_order(729), 11, 2, 3)
    assert code.params == (36, 12, 24, 11)


def test_t1_gives_constants():
    code = build_general(field_of_order(16), 3, 1, 2)
    assert code.k == 1 and code.d == code.n
    assert (code.generator == 1).all()


def test_general_ranges():
    F = field_of_order(16)
    with pytest.raises(RangeError):
        build_general(F, 3, 0, 2)
    with pytest.raises(RangeError):
        build_general(F, 3, 2, 6)
    with pytest.raises(RangeError):
        build_general(F, 4, 2, 3)


@pytest.mark.parametrize("q, r, t, ell", [(4, 2, 1, 2), (16, 2, 3, 6), (16, 3, 3, 4), (64, 5, 2, 4), (729, 11, 2, 3)])
def test_basis_lies_in_the_design_space(q, r, t, ell):
    code = build(field_of_order(q), r, t, ell)
    prov = code.provenance
    funcs = basis_functions(code)
    assert len(funcs) == code.k
    if r == 2:
        D = {INFINITY: 3 * t}
    else:
        D = {P: t - 1 for P in prov.pole_fiber}
    for f in funcs:
        for P in set(D) | {INFINITY}:
            if not f.is_zero:
                assert valuation(f, P) >= -D.get(P, 0)
    # generator rows are the evaluations of the symbolic basis
    from elliptic_lrc.funcfield import evaluate_many
    rows = np.array([evaluate_many(f, prov.plan.points) for f in funcs])
    assert (rows == code.generator).all()
    assert all(apply_automorphism(g, prov.z) == prov.z for g in prov.subgroup)


def test_fibers_are_disjoint_orbits():
    code = build_general(field_of_order(64), 3, 2, 19)
    plan = code.provenance.plan
    pts = plan.points
    assert len(set(pts)) == len(pts) == code.n
    assert not set(pts) & set(plan.excluded)
    assert set(code.provenance.pole_fiber) <= set(plan.excluded)


def test_rank_equals_dimension():
    for q, r, t, ell in [(9, 2, 4, 5), (25, 2, 10, 11), (64, 3, 10, 19), (81, 5, 5, 15)]:
        code = build(field_of_order(q), r, t, ell)
        assert linalg.rank(code.field, code.generator) == code.k


def test_seed_only_relabels_fibers():
    F = field_of_order(16)
    a = build_locality2(F, 2, 5)
    b = build_locality2(F, 2, 5, seed=7)
    assert a.params == b.params
    assert set(a.provenance.plan.points) != set(b.provenance.plan.points) or \
        a.provenance.plan.fibers != b.provenance.plan.fibers


# -------------------------------------------------------- encode / repair

def test_encode_basics():
    code = build_locality2(F4, 1, 2)
    assert not encode(code, [0, 0, 0]).any()
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 1
        assert list(encode(code, e)) == list(code.generator[i])
    with pytest.raises(LengthMismatch):
        encode(code, [1, 2])


def test_golden_repair_of_first_position_on_every_codeword():
    code = build_locality2(F4, 1, 2)
    assert code.repair_coefficients(0)[0] == (1, 2)
    for m in np.ndindex(4, 4, 4):
        c = encode(code, list(m))
        word = list(c)
        word[0] = None
        assert repair(code, word, 0) == c[0]


@pytest.mark.parametrize("q, r, t, ell", [(9, 2, 2, 5), (16, 3, 2, 5), (64, 7, 3, 6), (4096, 23, 2, 3)])
def test_repair_roundtrip(q, r, t, ell, rng):
    code = build(field_of_order(q), r, t, ell)
    msgs = np.array([[rng.randrange(q) for _ in range(code.k)] for _ in range(50)])
    words = encode_many(code, msgs)
    for c in words:
        for i in range(code.n):
            damaged = list(c)
            damaged[i] = None
            assert repair(code, damaged, i) == c[i]


def test_repair_rejects_bad_positions():
    code = build_locality2(F4, 1, 2)
    with pytest.raises(NotRepairable):
        code.repair_coefficients(6)
