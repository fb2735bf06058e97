from .field import (
    FieldElement,
    FieldSpec,
    all_elements,
    field_arith,
    field_create,
    field_of_order,
    roots_of_unity,
    solve_univariate_quadratic,
    unity_roots,
)

__all__ = [
    "FieldElement",
    "FieldSpec",
    "all_elements",
    "field_arith",
    "field_create",
    "field_of_order",
    "roots_of_unity",
    "solve_univariate_quadratic",
    "unity_roots",
]
