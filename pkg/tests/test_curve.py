import itertools
import math

import pytest

from elliptic_lrc.curve import (
    INFINITY,
    CurveSpec,
    Point,
    b_invariants,
    catalog_families,
    discriminant_and_j,
    enumerate_points,
    is_maximal,
    is_nonsingular,
    maximal_curve,
    point_add,
    point_count,
    point_neg,
    scalar_mul,
    trace,
)
from elliptic_lrc.errors import NotASquare, PointNotOnCurve, SingularCurve, UnsupportedCharacteristic
from elliptic_lrc.gf import field_of_order


def brute_count(curve):
    """Independent count straight from the Weierstrass equation."""
    F = curve.field
    return 1 + sum(curve.lhs(x, y) == curve.rhs(x) for x, y in itertools.product(range(F.q), repeat=2))


# ------------------------------------------------------------ point counts

@pytest.mark.parametrize("q, coeffs, expected", [
    (4, dict(a3=1), 9),
    (16, dict(a3=1), 9),
    (64, dict(a3=1), 81),
    (9, dict(a4=1), 16),
])
def test_known_point_counts(q, coeffs, expected):
    curve = CurveSpec(field_of_order(q), **coeffs)
    assert point_count(curve) == expected
    assert brute_count(curve) == expected


def test_f16_twist_has_25_points():
    entry = maximal_curve(field_of_order(16))
    assert entry.family == "char2_twist"
    assert point_count(entry.curve) == 25


@pytest.mark.parametrize("q", [4, 9, 16, 25, 49, 64, 81, 729, 4096])
def test_catalog_curves_are_maximal(q):
    entry = maximal_curve(field_of_order(q))
    assert entry.expected_count == q + 1 + 2 * math.isqrt(q)
    assert is_maximal(entry.curve)
    assert trace(entry.curve) == -2 * math.isqrt(q)


def test_catalog_preconditions():
    with pytest.raises(NotASquare):
        maximal_curve(field_of_order(8))
    with pytest.raises(UnsupportedCharacteristic):
        maximal_curve(field_of_order(13 ** 2))  # 13 = 1 mod 4 and 1 mod 3
    assert catalog_families(7) == ["p3mod4_lemma214"]
    assert catalog_families(11) == ["p3mod4_lemma214", "p2mod3_lemma215"]
    assert maximal_curve(field_of_order(121), "p2mod3_lemma215").expected_count == 144


def test_point_order_is_canonical():
    pts = enumerate_points(CurveSpec(field_of_order(4), a3=1))
    assert pts[0] is INFINITY
    assert list(pts[1:]) == sorted(pts[1:])
    assert pts[1:3] == (Point(0, 0), Point(0, 1))


# ------------------------------------------------------------- Hasse-Weil

@pytest.mark.parametrize("q", [5, 7, 9, 13])
def test_hasse_weil_on_random_curves(q, rng):
    F = field_of_order(q)
    seen = 0
    while seen < 100:
        curve = CurveSpec(F, *(rng.randrange(q) for _ in range(5)))
        if not is_nonsingular(curve):
            with pytest.raises(SingularCurve):
                enumerate_points(curve)
            continue
        seen += 1
        N = point_count(curve)
        assert N == brute_count(curve)
        assert (N - q - 1) ** 2 <= 4 * q


def test_discriminant_of_singular_cusp():
    F = field_of_order(5)
    assert discriminant_and_j(CurveSpec(F)) == (0, None)
    assert not is_nonsingular(CurveSpec(F))
    assert len(b_invariants(CurveSpec(F, a4=1))) == 4


def test_j_invariants_of_catalog_shapes():
    # y^2 = x^3 + x has j = 1728; y^2 = x^3 + 1 has j = 0
    assert discriminant_and_j(CurveSpec(field_of_order(49), a4=1))[1] == field_of_order(49).from_int(1728)
    assert discriminant_and_j(CurveSpec(field_of_order(25), a6=1))[1] == 0


# --------------------------------------------------------------- group law

GROUP_CURVES = [
    CurveSpec(field_of_order(4), a3=1),
    CurveSpec(field_of_order(16), a1=1, a2=3, a6=5),
    CurveSpec(field_of_order(9), a4=1),
    CurveSpec(field_of_order(13), a1=2, a2=3, a3=4, a4=5, a6=6),
    CurveSpec(field_of_order(25), a6=1),
]


@pytest.mark.parametrize("curve", GROUP_CURVES, ids=repr)
def test_group_law_associativity(curve, rng):
    pts = enumerate_points(curve)
    for _ in range(1000 // len(GROUP_CURVES)):
        P, Q, R = (rng.choice(pts) for _ in range(3))
        assert point_add(curve, point_add(curve, P, Q), R) == point_add(curve, P, point_add(curve, Q, R))


@pytest.mark.parametrize("curve", GROUP_CURVES, ids=repr)
def test_group_axioms(curve):
    pts = enumerate_points(curve)
    N = len(pts)
    for P in pts:
        assert point_add(curve, P, INFINITY) == P
        assert point_add(curve, P, point_neg(curve, P)) == INFINITY
        assert curve.contains(point_add(curve, P, P))
        assert scalar_mul(curve, N, P) == INFINITY
    for P, Q in zip(pts, reversed(pts)):
        assert point_add(curve, P, Q) == point_add(curve, Q, P)


def test_chord_tangent_example_on_f4():
    F = field_of_order(4)
    curve = CurveSpec(F, a3=1)
    # (0,0) + (0,1) = O since they share x; (1,2) doubled stays on the curve
    assert point_add(curve, Point(0, 0), Point(0, 1)) == INFINITY
    assert point_neg(curve, Point(1, 2)) == Point(1, 3)
    # all 9 points form a group of exponent 3 for this supersingular curve
    assert all(scalar_mul(curve, 3, P) == INFINITY for P in enumerate_points(curve))


def test_off_curve_points_rejected():
    curve = CurveSpec(field_of_order(4), a3=1)
    with pytest.raises(PointNotOnCurve):
        point_add(curve, Point(1, 1), INFINITY)


def test_curve_serialization():
    curve = maximal_curve(field_of_order(16)).curve
    assert CurveSpec.from_dict(curve.to_dict()) == curve
    P = enumerate_points(curve)[5]
    assert Point.from_json(curve.field, P.to_json(curve.field)) == P
