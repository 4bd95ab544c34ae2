"""
Input files for the command line: ideals, quadruples and actions.

Ideal file:

    {
      "field": "Q",
      "vars": ["x", "y"],
      "generators": ["x^2", "x*y"]
    }

Quadruple arguments are file paths or catalog names (ga, gm, mu4, mu6, sl2, gl2).
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

from src.centraliser import ActionSpec, PointList, base_change_action, example_action, load_action, standard_points
from src.hopf import HopfQuadruple, base_change_quadruple, catalog_quadruple, load_quadruple
from src.idealops import Ideal
from src.polyalg import FieldSpec, PolyRing, parse_order
from src.polyalg.monomials import MonomialOrder
from src.utils.errors import InvalidParameter

logger = logging.getLogger(__name__)

RATIONALS = FieldSpec.rationals()


def read_json(path: str) -> Dict[str, Any]:
    file_path = Path(path)
    if not file_path.exists():
        raise InvalidParameter(f"input file {path} not found", stage="load")
    try:
        return json.loads(file_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InvalidParameter(f"{path} is not valid JSON: {e}", stage="load")


def resolve_field(declared: FieldSpec, override: Optional[str]) -> FieldSpec:
    """The --field override if given; integer input defaults to ℚ."""
    if override:
        return FieldSpec.from_string(override)
    if not declared.is_field:
        logger.debug(f"input over {declared}, computing over Q")
        return RATIONALS
    return declared


def load_ideal(path: str, field_override: Optional[str] = None) -> Ideal:
    """Parse an ideal file; generators are read directly in the target field."""
    data = read_json(path)
    missing = [key for key in ("field", "vars", "generators") if key not in data]
    if missing:
        raise InvalidParameter(f"ideal file is missing {', '.join(missing)}", stage="load")
    field_spec = resolve_field(FieldSpec.from_string(data["field"]), field_override)
    ring = PolyRing(field_spec, tuple(data["vars"]))
    return Ideal.from_strings(ring, data["generators"])


def resolve_order(label: Optional[str], ring: PolyRing) -> MonomialOrder:
    return parse_order(label or "grlex", ring.nvars)


def read_group(reference: str) -> HopfQuadruple:
    """A quadruple file or catalog name, over its declared ring."""
    if reference.endswith(".json") or Path(reference).exists():
        return load_quadruple(reference)
    return catalog_quadruple(reference)


def load_group(reference: str, field_override: Optional[str] = None) -> HopfQuadruple:
    """A quadruple file or catalog name, base-changed to the target field."""
    H = read_group(reference)
    target = resolve_field(H.field, field_override)
    return H if target == H.field else base_change_quadruple(H, target)


def load_centraliser_input(
    action_path: Optional[str], example: Optional[str], field_override: Optional[str]
) -> Tuple[ActionSpec, PointList]:
    """Action and points from a file, or a built-in example with the point e₁."""
    if example:
        field_spec = FieldSpec.from_string(field_override) if field_override else RATIONALS
        return example_action(example, field_spec), standard_points()
    if not action_path:
        raise InvalidParameter("centralise needs --action or --example", stage="load")
    A, N = load_action(action_path)
    target = resolve_field(A.field, field_override)
    return (A if target == A.field else base_change_action(A, target)), N
