"""Division, Buchberger's algorithm, membership, elimination, dimension and degree bounds."""

from src.groebner.basis import GroebnerBasis, is_groebner, member
from src.groebner.bounds import DubeBound, dube_bound, within_dube_bound
from src.groebner.buchberger import buchberger, reduce_to_d_bounded
from src.groebner.dimension import dimension, max_independent_set, monomial_dimension
from src.groebner.division import DivisionResult, divide, product_criterion, reduce, s_pair_data, s_polynomial
from src.groebner.elimination import eliminate

__all__ = [
    "DivisionResult",
    "DubeBound",
    "GroebnerBasis",
    "buchberger",
    "dimension",
    "divide",
    "dube_bound",
    "eliminate",
    "is_groebner",
    "max_independent_set",
    "member",
    "monomial_dimension",
    "product_criterion",
    "reduce",
    "reduce_to_d_bounded",
    "s_pair_data",
    "s_polynomial",
    "within_dube_bound",
]
