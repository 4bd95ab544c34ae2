"""
The rational function field K = k(t₁,…,t_m) over a parameter ring k[t₁,…,t_m].

Elements are kept reduced: gcd(numerator, denominator) is a unit and the
denominator is monic under GradedLex.
"""

from dataclasses import dataclass
from typing import Dict, Mapping

from src.polyalg.monomials import GRADED_LEX
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.errors import InvalidParameter, RingMismatch
from src.utils.sympy_bridge import poly_gcd, poly_lcm


@dataclass(frozen=True)
class FractionField:
    """K = Frac(base)."""

    base: PolyRing

    def element(self, numerator: Polynomial, denominator: Polynomial = None) -> "RationalFunction":
        if denominator is None:
            denominator = self.base.one()
        return RationalFunction.reduced(self, numerator, denominator)

    def zero(self) -> "RationalFunction":
        return self.element(self.base.zero())

    def one(self) -> "RationalFunction":
        return self.element(self.base.one())

    def __str__(self):
        return f"Frac({self.base})"


class RationalFunction:
    """A reduced fraction numerator / denominator."""

    __slots__ = ("field", "numerator", "denominator")

    def __init__(self, field: FractionField, numerator: Polynomial, denominator: Polynomial):
        self.field = field
        self.numerator = numerator
        self.denominator = denominator

    @classmethod
    def reduced(cls, field: FractionField, numerator: Polynomial, denominator: Polynomial) -> "RationalFunction":
        base = field.base
        for part in (numerator, denominator):
            if part.ring.variables != base.variables or part.ring.field != base.field:
                raise RingMismatch(f"{part} is not in {base}", stage="fraction_field")
        if denominator.is_zero():
            raise InvalidParameter("zero denominator", stage="fraction_field")
        if numerator.is_zero():
            return cls(field, base.zero(), base.one())
        g = poly_gcd(numerator, denominator)
        if not g.is_constant():
            numerator = numerator.exact_quotient(g)
            denominator = denominator.exact_quotient(g)
        lead = denominator.leading_coefficient(GRADED_LEX)
        fld = base.field
        inv = fld.inverse(lead)
        return cls(field, numerator.scale(inv), denominator.scale(inv))

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def _check(self, other: "RationalFunction"):
        if other.field != self.field:
            raise RingMismatch(f"cannot combine elements of {self.field} and {other.field}", stage="fraction_field")

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        return RationalFunction.reduced(
            self.field,
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.field, -self.numerator, self.denominator)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        self._check(other)
        return RationalFunction.reduced(
            self.field, self.numerator * other.numerator, self.denominator * other.denominator
        )

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("zero has no inverse in a fraction field")
        return RationalFunction.reduced(self.field, self.denominator, self.numerator)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        return self * other.inverse()

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return (
            self.field == other.field
            and self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __str__(self):
        if self.denominator.is_constant():
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    __repr__ = __str__


def clear_denominators(
    coefficients: Mapping[int, RationalFunction], variable: str, ring: PolyRing
) -> Polynomial:
    """
    Turn g = Σ c_k·x^k ∈ K[x] into the associate with coefficients in the parameter ring.

    Args:
        coefficients: Exponent of `variable` → coefficient in K
        variable: Name of x in `ring`
        ring: Ring containing x and every parameter

    Returns:
        lcm(denominators)·g embedded into `ring` (not yet primitive)
    """
    nonzero = {k: c for k, c in coefficients.items() if not c.is_zero()}
    if not nonzero:
        return ring.zero()
    fields = {c.field for c in nonzero.values()}
    if len(fields) != 1:
        raise RingMismatch("coefficients come from different fraction fields", stage="fraction_field")
    base = next(iter(fields)).base
    common = base.one()
    for c in nonzero.values():
        common = poly_lcm(common, c.denominator)
    x = ring.gen(variable)
    result = ring.zero()
    for k, c in nonzero.items():
        scaled = (c.numerator * common).exact_quotient(c.denominator)
        result = result + scaled.embed(ring) * x ** k
    return result


def coefficients_in(g: Polynomial, variable: str, fraction_field: FractionField) -> Dict[int, RationalFunction]:
    """View g ∈ k[params][x] as a polynomial in x over K."""
    ring = g.ring
    v = ring.index(variable)
    base = fraction_field.base
    grouped: Dict[int, Dict[tuple, object]] = {}
    for m, c in g.terms.items():
        rest = m[:v] + (0,) + m[v + 1:]
        grouped.setdefault(m[v], {})[rest] = c
    out = {}
    for k, terms in grouped.items():
        numerator = Polynomial(ring, terms).restrict(base)
        out[k] = fraction_field.element(numerator)
    return out


def parameter_content(g: Polynomial, variable: str) -> Polynomial:
    """gcd over the parameter ring of the coefficients of g as a polynomial in x."""
    ring = g.ring
    v = ring.index(variable)
    grouped: Dict[int, Dict[tuple, object]] = {}
    for m, c in g.terms.items():
        grouped.setdefault(m[v], {})[m[:v] + (0,) + m[v + 1:]] = c
    content = None
    for terms in grouped.values():
        coeff = Polynomial(ring, terms)
        content = coeff if content is None else poly_gcd(content, coeff)
        if content.is_constant():
            return ring.one()
    return ring.one() if content is None else content


def primitive_part(g: Polynomial, variable: str) -> Polynomial:
    """g divided by its content in the parameter ring, normalised monic under GradedLex."""
    content = parameter_content(g, variable)
    if not content.is_constant():
        g = g.exact_quotient(content)
    return g.monic(GRADED_LEX)

