"""
Built-in quadruples: G_a, G_m, μ_n, SL₂, GL₂ (with u = det⁻¹) and α_p.
"""

from typing import Callable, Dict, Optional

from src.hopf.quadruple import HopfQuadruple, quadruple_from_strings
from src.polyalg.fields import FieldSpec
from src.utils.errors import InvalidParameter

INTEGERS = FieldSpec.integers()


def additive_group(field: FieldSpec = INTEGERS) -> HopfQuadruple:
    return quadruple_from_strings(
        field, ["x"], [], {"x": "x' + x''"}, {"x": "-x"}, {"x": "0"}, name="ga"
    )


def multiplicative_group(field: FieldSpec = INTEGERS) -> HopfQuadruple:
    return quadruple_from_strings(
        field,
        ["x", "y"],
        ["x*y - 1"],
        {"x": "x'*x''", "y": "y'*y''"},
        {"x": "y", "y": "x"},
        {"x": "1", "y": "1"},
        name="gm",
    )


def roots_of_unity(n: int, field: FieldSpec = INTEGERS) -> HopfQuadruple:
    """μ_n = Spec k[x]/(xⁿ − 1)."""
    if n < 1:
        raise InvalidParameter(f"μ_n needs n ≥ 1, got {n}", stage="catalog")
    antipode = f"x^{n - 1}" if n > 2 else ("x" if n == 2 else "1")
    relation = f"x^{n} - 1" if n > 1 else "x - 1"
    return quadruple_from_strings(
        field, ["x"], [relation], {"x": "x'*x''"}, {"x": antipode}, {"x": "1"}, name=f"mu{n}"
    )


def special_linear(field: FieldSpec = INTEGERS) -> HopfQuadruple:
    return quadruple_from_strings(
        field,
        ["a", "b", "c", "d"],
        ["a*d - b*c - 1"],
        {
            "a": "a'*a'' + b'*c''",
            "b": "a'*b'' + b'*d''",
            "c": "c'*a'' + d'*c''",
            "d": "c'*b'' + d'*d''",
        },
        {"a": "d", "b": "-b", "c": "-c", "d": "a"},
        {"a": "1", "b": "0", "c": "0", "d": "1"},
        name="sl2",
    )


def general_linear(field: FieldSpec = INTEGERS) -> HopfQuadruple:
    """GL₂ as the closed subscheme (ad − bc)·u = 1 of 𝔸⁵."""
    return quadruple_from_strings(
        field,
        ["a", "b", "c", "d", "u"],
        ["a*d*u - b*c*u - 1"],
        {
            "a": "a'*a'' + b'*c''",
            "b": "a'*b'' + b'*d''",
            "c": "c'*a'' + d'*c''",
            "d": "c'*b'' + d'*d''",
            "u": "u'*u''",
        },
        {"a": "d*u", "b": "-b*u", "c": "-c*u", "d": "a*u", "u": "a*d - b*c"},
        {"a": "1", "b": "0", "c": "0", "d": "1", "u": "1"},
        name="gl2",
    )


def alpha(p: int, field: Optional[FieldSpec] = None) -> HopfQuadruple:
    """α_p = Spec k[x]/(x^p) with additive comultiplication (a Hopf algebra only in characteristic p)."""
    field = FieldSpec.prime(p) if field is None else field
    return quadruple_from_strings(
        field, ["x"], [f"x^{p}"], {"x": "x' + x''"}, {"x": "-x"}, {"x": "0"}, name=f"alpha{p}"
    )


CATALOG: Dict[str, Callable[[FieldSpec], HopfQuadruple]] = {
    "ga": additive_group,
    "gm": multiplicative_group,
    "mu4": lambda field=INTEGERS: roots_of_unity(4, field),
    "mu6": lambda field=INTEGERS: roots_of_unity(6, field),
    "sl2": special_linear,
    "gl2": general_linear,
}


def catalog_quadruple(name: str, field: FieldSpec = INTEGERS) -> HopfQuadruple:
    """
    Look up a built-in quadruple by name; `muN` and `alphaP` are accepted for any N, P.
    """
    key = name.strip().lower()
    if key in CATALOG:
        return CATALOG[key](field)
    if key.startswith("mu") and key[2:].isdigit():
        return roots_of_unity(int(key[2:]), field)
    if key.startswith("alpha") and key[5:].isdigit():
        return alpha(int(key[5:]), None if field == INTEGERS else field)
    raise InvalidParameter(f"unknown catalog entry {name!r} (known: {', '.join(sorted(CATALOG))})", stage="catalog")
