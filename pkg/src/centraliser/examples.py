"""
Built-in actions: GL₂ on 𝔸² (natural and Frobenius-twisted) and the trivial action.
"""

from typing import Callable, Dict, Optional

from src.centraliser.action import ActionSpec, PointList, action_from_strings
from src.hopf.catalog import INTEGERS, catalog_quadruple, general_linear
from src.polyalg.fields import FieldSpec
from src.utils.errors import InvalidParameter

CHART = ("t1", "t2")


def natural_action(field: FieldSpec = INTEGERS) -> ActionSpec:
    """GL₂ acting on column vectors: t₁ ↦ a t₁ + b t₂, t₂ ↦ c t₁ + d t₂."""
    return action_from_strings(
        general_linear(field), CHART, [], {"t1": "a*t1 + b*t2", "t2": "c*t1 + d*t2"}, name="gl2-natural"
    )


def frobenius_twist(p: int, field: Optional[FieldSpec] = None) -> ActionSpec:
    """
    GL₂ acting through the p-th power of its matrix entries.

    Defaults to 𝔽_p, where the twist is a group action; its stabilisers are
    nonreduced and the action polynomials grow with p.
    """
    field = FieldSpec.prime(p) if field is None else field
    return action_from_strings(
        general_linear(field),
        CHART,
        [],
        {"t1": f"a^{p}*t1 + b^{p}*t2", "t2": f"c^{p}*t1 + d^{p}*t2"},
        name=f"gl2-frobenius{p}",
    )


def trivial_action(group: str = "gl2", field: FieldSpec = INTEGERS, chart_dim: int = 2) -> ActionSpec:
    """Every t_l ↦ t_l; the centraliser of any point set is the whole group."""
    if chart_dim < 1:
        raise InvalidParameter(f"chart dimension must be ≥ 1, got {chart_dim}", stage="action")
    chart = tuple(f"t{l + 1}" for l in range(chart_dim))
    return action_from_strings(catalog_quadruple(group, field), chart, [], {t: t for t in chart}, name=f"{group}-trivial")


def standard_points() -> PointList:
    """The single point e₁ = (1, 0)."""
    return PointList([("1", "0")], ["e1"])


EXAMPLES: Dict[str, Callable[..., ActionSpec]] = {
    "natural": natural_action,
    "frobenius-twist": frobenius_twist,
    "trivial": trivial_action,
}


def example_action(name: str, field: FieldSpec) -> ActionSpec:
    """
    Instantiate a built-in action over a field; the Frobenius twist takes p from 𝔽_p.

    Raises:
        InvalidParameter: Unknown name, or the Frobenius twist over a field without a characteristic
    """
    key = name.strip().lower()
    if key == "frobenius-twist":
        if not field.is_prime_field:
            raise InvalidParameter("the Frobenius twist needs a prime field Fp:p", stage="action")
        return frobenius_twist(field.p)
    if key not in EXAMPLES:
        raise InvalidParameter(f"unknown example {name!r} (known: {', '.join(sorted(EXAMPLES))})", stage="action")
    return EXAMPLES[key](field=field)
