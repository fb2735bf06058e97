"""Optimal locally repairable codes from maximal elliptic curves over finite fields."""
from .gf import FieldElement, FieldSpec, field_create, field_of_order
from .curve import CurveSpec, Point, INFINITY, enumerate_points, maximal_curve
from .autgroup import Automorphism, Subgroup, enumerate_automorphisms
from .funcfield import CurveFunction, DivisorSpec, rr_basis
from .lrc import LrcCode, build, build_general, build_locality2, encode, repair
from .verify import VerificationReport, certify, singleton_type_bound

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "Automorphism",
    "CurveFunction",
    "CurveSpec",
    "DivisorSpec",
    "FieldElement",
    "FieldSpec",
    "LrcCode",
    "Point",
    "Subgroup",
    "VerificationReport",
    "build",
    "build_general",
    "build_locality2",
    "certify",
    "encode",
    "enumerate_automorphisms",
    "enumerate_points",
    "field_create",
    "field_of_order",
    "maximal_curve",
    "repair",
    "rr_basis",
    "singleton_type_bound",
]
