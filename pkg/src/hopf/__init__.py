"""Hopf quadruples, axiom checks, Lie and group dimensions, smoothness."""

from src.hopf.axioms import (
    AxiomFailure,
    HopfCheckResult,
    check_hopf,
    factors_through,
    is_hopf,
    require_hopf,
    tensor_basis,
    tensor_presentation,
)
from src.hopf.catalog import (
    additive_group,
    alpha,
    catalog_quadruple,
    general_linear,
    multiplicative_group,
    roots_of_unity,
    special_linear,
)
from src.hopf.io import dump_quadruple, load_quadruple, quadruple_from_dict, quadruple_to_dict
from src.hopf.quadruple import HopfQuadruple, base_change_quadruple, quadruple_from_strings, tensor_name, tensor_ring
from src.hopf.smoothness import SmoothnessReport, group_dimension, is_smooth, jacobian_at_counit, lie_dimension

__all__ = [
    "AxiomFailure",
    "HopfCheckResult",
    "HopfQuadruple",
    "SmoothnessReport",
    "additive_group",
    "alpha",
    "base_change_quadruple",
    "catalog_quadruple",
    "check_hopf",
    "dump_quadruple",
    "factors_through",
    "general_linear",
    "group_dimension",
    "is_hopf",
    "is_smooth",
    "jacobian_at_counit",
    "lie_dimension",
    "load_quadruple",
    "multiplicative_group",
    "quadruple_from_dict",
    "quadruple_from_strings",
    "quadruple_to_dict",
    "require_hopf",
    "roots_of_unity",
    "special_linear",
    "tensor_basis",
    "tensor_name",
    "tensor_presentation",
    "tensor_ring",
]
