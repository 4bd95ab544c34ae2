"""Ideal operations: saturation, quotients, intersections, radical membership, contraction."""

from src.idealops.ideal import Ideal
from src.idealops.operations import (
    Contraction,
    RadicalMembership,
    SaturationResult,
    contract,
    contraction_data,
    head_coefficient,
    intersect,
    intersect_all,
    quotient,
    radical_member,
    saturate,
)

__all__ = [
    "Contraction",
    "Ideal",
    "RadicalMembership",
    "SaturationResult",
    "contract",
    "contraction_data",
    "head_coefficient",
    "intersect",
    "intersect_all",
    "quotient",
    "radical_member",
    "saturate",
]
