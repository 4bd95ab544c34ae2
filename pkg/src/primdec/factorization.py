"""
Factorization over the coefficient field and over rational function fields.

Over ℚ sympy factors multivariate polynomials directly. Over 𝔽_p univariate
polynomials go to `galoistools.gf_factor`; multivariate ones are mapped to one
variable by Kronecker substitution xᵢ ↦ y^(Dⁱ), the image is factored, and
sub-products of the image factors are tried as divisors in increasing y-degree.
The first one that divides is irreducible.
"""

import logging
from itertools import product
from typing import Dict, List, Mapping, Optional, Tuple, Union

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_factor, gf_from_dict, gf_mul, gf_pow, gf_to_dict

from src.polyalg.fields import FieldKind
from src.polyalg.monomials import GRADED_LEX, Monomial
from src.polyalg.polynomial import PolyRing, Polynomial
from src.primdec.fraction_field import RationalFunction, clear_denominators, primitive_part
from src.utils.config import ResourceLimits, default_limits
from src.utils.errors import FactorizationLimitExceeded, InvalidParameter
from src.utils.sympy_bridge import factor_rational

logger = logging.getLogger(__name__)

Factor = Tuple[Polynomial, int]


def _factor_gf_univariate(g: Polynomial) -> List[Factor]:
    ring = g.ring
    p = ring.field.p
    support = g.support_indices()
    v = support[0]
    dense = gf_from_dict({m[v]: int(c) for m, c in g.terms.items()}, p, ZZ)
    _, factors = gf_factor(dense, p, ZZ)
    out = []
    for coeffs, k in factors:
        terms = {}
        for e, c in gf_to_dict(coeffs, p, symmetric=False).items():
            exps = [0] * ring.nvars
            exps[v] = int(e)
            terms[tuple(exps)] = int(c) % p
        out.append((Polynomial(ring, terms), int(k)))
    return out


def _kronecker_candidates(g: Polynomial, limits: ResourceLimits):
    """Yield candidate divisors of g decoded from sub-products of the substituted image."""
    ring = g.ring
    p = ring.field.p
    support = g.support_indices()
    D = 1 + max(g.degree_in(i) for i in support)

    def encode(m: Monomial) -> int:
        return sum(m[i] * D ** k for k, i in enumerate(support))

    def decode(e: int) -> Monomial:
        exps = [0] * ring.nvars
        for i in support:
            e, exps[i] = divmod(e, D)
        return tuple(exps)

    image = gf_from_dict({encode(m): int(c) for m, c in g.terms.items()}, p, ZZ)
    _, factors = gf_factor(image, p, ZZ)
    total = 1
    for _, k in factors:
        total *= k + 1
    if total > limits.max_factor_candidates:
        raise FactorizationLimitExceeded(
            f"{total} candidate divisors exceed the limit {limits.max_factor_candidates}", stage="factor"
        )
    degrees = [len(f) - 1 for f, _ in factors]
    vectors = [v for v in product(*(range(k + 1) for _, k in factors)) if any(v)]
    vectors.sort(key=lambda v: (sum(d * e for d, e in zip(degrees, v)), v))
    for vector in vectors:
        candidate = [ZZ.one]
        for (f, _), e in zip(factors, vector):
            if e:
                candidate = gf_mul(candidate, gf_pow(f, e, p, ZZ), p, ZZ)
        terms = {decode(int(e)): int(c) % p for e, c in gf_to_dict(candidate, p, symmetric=False).items()}
        yield Polynomial(ring, terms)


def _factor_gf_multivariate(g: Polynomial, limits: ResourceLimits) -> List[Factor]:
    out: List[Factor] = []
    remaining = g
    while not remaining.is_constant():
        found = None
        for candidate in _kronecker_candidates(remaining, limits):
            if candidate.is_constant():
                continue
            quotient = remaining.exact_quotient(candidate)
            if quotient is not None:
                found = candidate.monic(GRADED_LEX)
                break
        if found is None:
            raise FactorizationLimitExceeded(f"no divisor of {remaining} found", stage="factor")
        k = 0
        while True:
            quotient = remaining.exact_quotient(found)
            if quotient is None:
                break
            remaining = quotient
            k += 1
        out.append((found, k))
    return out


def factor_polynomial(g: Polynomial, limits: Optional[ResourceLimits] = None) -> List[Factor]:
    """
    Irreducible factors of g over its coefficient field, monic under GradedLex.

    Args:
        g: Nonzero polynomial over ℚ or 𝔽_p
        limits: Resource ceilings (candidate divisor count)

    Returns:
        Pairwise non-associate irreducible factors with multiplicities, sorted canonically
    """
    if g.is_zero():
        raise InvalidParameter("cannot factor the zero polynomial", stage="factor")
    limits = default_limits() if limits is None else limits
    field = g.ring.field
    if g.is_constant():
        return []
    if field.kind == FieldKind.RATIONALS:
        _, factors = factor_rational(g)
    elif field.kind == FieldKind.PRIME:
        if len(g.support_indices()) == 1:
            factors = _factor_gf_univariate(g)
        else:
            factors = _factor_gf_multivariate(g, limits)
    else:
        raise InvalidParameter("factorization needs a field; base change first", stage="factor")
    merged: Dict[Polynomial, int] = {}
    for f, k in factors:
        if f.is_constant():
            continue
        f = f.monic(GRADED_LEX)
        merged[f] = merged.get(f, 0) + k
    return sorted(merged.items(), key=lambda item: (item[0].total_degree(), str(item[0])))


def factor_univariate(
    g: Union[Polynomial, Mapping[int, RationalFunction]],
    variable: str,
    ring: Optional[PolyRing] = None,
    limits: Optional[ResourceLimits] = None,
) -> List[Factor]:
    """
    Factor a polynomial in one variable x over K = k(parameters).

    Every variable of the ring other than x counts as a parameter. Factors are
    returned as primitive representatives in k[parameters][x] (Gauss's lemma),
    monic under GradedLex and sorted by x-degree.

    Args:
        g: Either a polynomial of k[parameters][x] or a map exponent → coefficient in K
        variable: Name of x
        ring: Target ring, required when g is given by K-coefficients
        limits: Resource ceilings

    Returns:
        (irreducible factor, multiplicity) pairs; empty when g is a unit of K[x]
    """
    if not isinstance(g, Polynomial):
        if ring is None:
            raise InvalidParameter("a ring is needed to clear denominators", stage="factor")
        g = clear_denominators(g, variable, ring)
    if g.is_zero():
        raise InvalidParameter("cannot factor the zero polynomial", stage="factor")
    v = g.ring.index(variable)
    g = primitive_part(g, variable)
    degree = g.degree_in(v)
    if degree <= 0:
        return []
    if degree == 1:
        return [(g, 1)]
    factors = [(primitive_part(f, variable), k) for f, k in factor_polynomial(g, limits) if f.degree_in(v) > 0]
    factors.sort(key=lambda item: (item[0].degree_in(v), str(item[0])))
    logger.debug(f"factor_univariate: {g} -> {len(factors)} factors")
    return factors
