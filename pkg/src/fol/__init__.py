"""First-order ring formulas for bounded Gröbner bases and Hopf quadruples: builders, evaluation, printing."""

from src.fol.builders import (
    BUILDERS,
    beta,
    build,
    delta,
    eta,
    iota,
    jacobian_terms,
    phi,
    psi,
    smoothness_sentence,
    tau,
    theta,
    zeta,
)
from src.fol.encoding import (
    assign,
    basis_values,
    groebner_relations,
    polynomial_values,
    quadruple_bound,
    quadruple_values,
    smoothness_values,
    tensor_values,
)
from src.fol.evaluator import Assignment, evaluate, evaluate_values
from src.fol.formula import Formula, Slot, check_well_formed, formula_size
from src.fol.printer import parse_formula, print_formula

__all__ = [
    "Assignment",
    "BUILDERS",
    "Formula",
    "Slot",
    "assign",
    "basis_values",
    "beta",
    "build",
    "check_well_formed",
    "delta",
    "eta",
    "evaluate",
    "evaluate_values",
    "formula_size",
    "groebner_relations",
    "iota",
    "jacobian_terms",
    "parse_formula",
    "phi",
    "polynomial_values",
    "print_formula",
    "psi",
    "quadruple_bound",
    "quadruple_values",
    "smoothness_sentence",
    "smoothness_values",
    "tau",
    "tensor_values",
    "theta",
    "zeta",
]
