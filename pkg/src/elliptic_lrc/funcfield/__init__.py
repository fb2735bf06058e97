from .divisor import DivisorSpec
from .function import CurveFunction, apply_automorphism, fn_arith, linear_combination
from .riemann_roch import (
    cubic_invariant,
    divisor_sum,
    function_with_exact_poles,
    invariant_z,
    is_invariant,
    monomial_exponents,
    residue_row,
    rr_basis,
    rr_basis_pole_at_O,
)
from .series import (
    POLE,
    Pole,
    evaluate,
    evaluate_many,
    laurent,
    local_expansion,
    principal_divisor,
    valuation,
)

__all__ = [
    "POLE",
    "CurveFunction",
    "DivisorSpec",
    "Pole",
    "apply_automorphism",
    "cubic_invariant",
    "divisor_sum",
    "evaluate",
    "evaluate_many",
    "fn_arith",
    "function_with_exact_poles",
    "invariant_z",
    "is_invariant",
    "laurent",
    "linear_combination",
    "local_expansion",
    "monomial_exponents",
    "principal_divisor",
    "residue_row",
    "rr_basis",
    "rr_basis_pole_at_O",
    "valuation",
]
