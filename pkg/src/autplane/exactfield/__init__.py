"""Exact coefficient fields, sparse polynomials and polynomial matrices."""

from .fields import (
    QQ,
    Field,
    FieldError,
    GaloisField,
    ModP,
    PrimeField,
    RationalFunction,
    RationalFunctions,
    Rationals,
    field_from_spec,
    format_scalar,
    is_prime,
)
from .matrix import (
    CharacteristicError,
    NotNilpotent,
    PolyMatrix,
    bareiss_det,
    exp_nilpotent,
    resultant,
    sylvester_matrix,
    zring,
)
from .parse import ParseError, parse_poly, parse_tuple
from .poly import Polynomial, PolyRing, RingMismatch, poly_mul, product, substitute

__all__ = [
    "QQ", "Field", "FieldError", "GaloisField", "ModP", "PrimeField", "RationalFunction",
    "RationalFunctions", "Rationals", "field_from_spec", "format_scalar", "is_prime",
    "CharacteristicError", "NotNilpotent", "PolyMatrix", "bareiss_det", "exp_nilpotent",
    "resultant", "sylvester_matrix", "zring", "ParseError", "parse_poly", "parse_tuple",
    "Polynomial", "PolyRing", "RingMismatch", "poly_mul", "product", "substitute",
]
