"""Exact polynomial arithmetic: fields, monomials, orders, parsing and d-bounded encodings."""

from src.polyalg.bounded import BoundedPoly, from_bounded, monomial_rank, monomial_unrank, to_bounded
from src.polyalg.fields import FieldKind, FieldSpec
from src.polyalg.monomials import (
    GRADED_LEX,
    Comparison,
    MonomialOrder,
    OrderKind,
    block,
    compare,
    elimination_order,
    graded_lex,
    lex,
    parse_order,
)
from src.polyalg.parsing import format_poly, parse_poly
from src.polyalg.polynomial import PolyRing, Polynomial, base_change

__all__ = [
    "BoundedPoly",
    "Comparison",
    "FieldKind",
    "FieldSpec",
    "GRADED_LEX",
    "MonomialOrder",
    "OrderKind",
    "PolyRing",
    "Polynomial",
    "base_change",
    "block",
    "compare",
    "elimination_order",
    "format_poly",
    "from_bounded",
    "graded_lex",
    "lex",
    "monomial_rank",
    "monomial_unrank",
    "parse_order",
    "parse_poly",
    "to_bounded",
]
