"""
Conversions between engine polynomials and sympy `Poly` objects.

sympy supplies the primitive-PRS gcd/lcm over ℚ and 𝔽_p and factorization over ℚ;
everything else stays in the engine's own representation.
"""

from fractions import Fraction
from typing import List, Tuple

from sympy import Poly, Rational, symbols
from sympy.polys.domains import GF, QQ, ZZ

from src.polyalg.fields import Coefficient, FieldKind, FieldSpec
from src.polyalg.polynomial import PolyRing, Polynomial


def sympy_domain(field: FieldSpec):
    if field.kind == FieldKind.RATIONALS:
        return QQ
    if field.kind == FieldKind.PRIME:
        return GF(field.p)
    return ZZ


def domain_element(field: FieldSpec, value: Coefficient):
    """A sympy domain element for an engine coefficient."""
    domain = sympy_domain(field)
    if field.kind == FieldKind.RATIONALS:
        value = Fraction(value)
        return domain(value.numerator, value.denominator)
    return domain(int(value))


def _generators(n: int):
    return symbols(f"v0:{max(n, 1)}")


def to_sympy(f: Polynomial) -> Poly:
    n = f.ring.nvars
    gens = _generators(n)
    field = f.ring.field
    rep = {}
    for m, c in f.terms.items():
        key = m if n else (0,)
        if field.kind == FieldKind.RATIONALS:
            rep[key] = Rational(c.numerator, c.denominator)
        else:
            rep[key] = int(c)
    if not rep:
        rep[(0,) * max(n, 1)] = 0
    return Poly.from_dict(rep, *gens, domain=sympy_domain(field))


def _coefficient(field: FieldSpec, value) -> Coefficient:
    if field.kind == FieldKind.RATIONALS:
        rational = Rational(value)
        return Fraction(int(rational.p), int(rational.q))
    return field.convert(int(value))


def from_sympy(poly: Poly, ring: PolyRing) -> Polynomial:
    field = ring.field
    n = ring.nvars
    terms = {}
    for monom, coeff in poly.terms():
        key = tuple(monom) if n else ()
        terms[key] = _coefficient(field, coeff)
    return Polynomial(ring, terms)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    return from_sympy(to_sympy(f).gcd(to_sympy(g)), f.ring)


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    return from_sympy(to_sympy(f).lcm(to_sympy(g)), f.ring)


def factor_rational(f: Polynomial) -> Tuple[Coefficient, List[Tuple[Polynomial, int]]]:
    """Irreducible factorization over ℚ (multivariate allowed)."""
    content, factors = to_sympy(f).factor_list()
    return _coefficient(f.ring.field, content), [(from_sympy(p, f.ring), k) for p, k in factors]
