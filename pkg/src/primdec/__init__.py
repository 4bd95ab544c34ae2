"""Primary decomposition: factorization, zero-dimensional splitting and the general recursion."""

from src.groebner import max_independent_set
from src.primdec.decomposition import (
    PrimaryComponent,
    associated_prime,
    classify_isolated,
    component_of,
    is_primary,
    primdec,
    verify_decomposition,
)
from src.primdec.factorization import factor_polynomial, factor_univariate
from src.primdec.fraction_field import FractionField, RationalFunction, clear_denominators, primitive_part
from src.primdec.zero_dim import ZeroDimComponent, primdec_zero_dim, quotient_dimension, univariate_eliminant

__all__ = [
    "FractionField",
    "PrimaryComponent",
    "RationalFunction",
    "ZeroDimComponent",
    "associated_prime",
    "classify_isolated",
    "clear_denominators",
    "component_of",
    "factor_polynomial",
    "factor_univariate",
    "is_primary",
    "max_independent_set",
    "primdec",
    "primdec_zero_dim",
    "primitive_part",
    "quotient_dimension",
    "univariate_eliminant",
    "verify_decomposition",
]
