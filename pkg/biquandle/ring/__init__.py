from biquandle.ring.coefficients import (
    Coefficient,
    CoefficientDomain,
    DomainMismatchError,
    InexactDivisionError,
    Quaternion,
    format_quaternion,
    gaussian,
    is_pure_unit,
    parse_quaternion_unit,
    quaternion_parts,
)
from biquandle.ring.laurent import (
    ALPHA,
    S,
    T,
    Z,
    LaurentPoly,
    Monomial,
    PolyOp,
    Var,
    monomial_unit_test,
    poly_arith,
    poly_ring,
)
from biquandle.ring.matrix import (
    DimensionError,
    RingMatrix,
    bareiss_determinant,
    cofactor_determinant,
    determinant,
    mat_mul,
    quaternion_to_complex_rep,
    study_determinant,
)

__all__ = [
    "ALPHA",
    "S",
    "T",
    "Z",
    "Coefficient",
    "CoefficientDomain",
    "DimensionError",
    "DomainMismatchError",
    "InexactDivisionError",
    "LaurentPoly",
    "Monomial",
    "PolyOp",
    "Quaternion",
    "RingMatrix",
    "Var",
    "bareiss_determinant",
    "cofactor_determinant",
    "determinant",
    "format_quaternion",
    "gaussian",
    "is_pure_unit",
    "mat_mul",
    "monomial_unit_test",
    "parse_quaternion_unit",
    "poly_arith",
    "poly_ring",
    "quaternion_parts",
    "quaternion_to_complex_rep",
    "study_determinant",
]
