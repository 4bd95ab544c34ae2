"""Centraliser subgroup schemes of chart points under a group action."""

from src.centraliser.action import (
    ActionSpec,
    PointList,
    action_from_dict,
    action_from_strings,
    base_change_action,
    load_action,
)
from src.centraliser.examples import (
    EXAMPLES,
    example_action,
    frobenius_twist,
    natural_action,
    standard_points,
    trivial_action,
)
from src.centraliser.pipeline import (
    CentraliserResult,
    PointStage,
    centraliser_ideal,
    centraliser_quadruple,
    closure_ideal,
    contains_group,
    identity_component,
    point_ideal,
)

__all__ = [
    "ActionSpec",
    "CentraliserResult",
    "EXAMPLES",
    "PointList",
    "PointStage",
    "action_from_dict",
    "action_from_strings",
    "base_change_action",
    "centraliser_ideal",
    "centraliser_quadruple",
    "closure_ideal",
    "contains_group",
    "example_action",
    "frobenius_twist",
    "identity_component",
    "load_action",
    "natural_action",
    "point_ideal",
    "standard_points",
    "trivial_action",
]
