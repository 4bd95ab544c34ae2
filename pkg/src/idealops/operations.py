"""
Saturation, quotients, intersections, radical membership and contraction.

Each operation adjoins a fresh variable and eliminates it again:

    (I : f^∞) = (I, 1 − y·f) ∩ S
    I ∩ J     = (t·I, (1 − t)·J) ∩ S
    f ∈ √I   ⇔ 1 ∈ (I, 1 − y·f)
"""

import logging
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from src.groebner import GroebnerBasis, buchberger, eliminate
from src.polyalg.monomials import GRADED_LEX, Monomial, MonomialOrder, block
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.config import ResourceLimits, default_limits
from src.idealops.ideal import Ideal
from src.utils.errors import InvalidParameter, NotProper, ResourceLimitExceeded, RingMismatch
from src.utils.sympy_bridge import poly_lcm

logger = logging.getLogger(__name__)


class SaturationResult(NamedTuple):
    ideal: Ideal
    exponent: int


class RadicalMembership(NamedTuple):
    member: bool
    exponent: Optional[int]


class Contraction(NamedTuple):
    """I^c = (I : f^s) together with the head-coefficient lcm f and exponent s."""

    ideal: Ideal
    multiplier: Polynomial
    exponent: int


def _eliminate_fresh(generators: Sequence[Polynomial], big: PolyRing, ring: PolyRing, limits) -> Ideal:
    """Eliminate the adjoined variables and return the result as an ideal of `ring`."""
    basis = eliminate(generators, ring.variables, ring=big, limits=limits)
    target = ring.with_order(GRADED_LEX)
    gens = [Polynomial(target, g.terms) for g in basis]
    result = Ideal(ring, gens)
    result._set_basis_unchecked(GroebnerBasis(target, gens, GRADED_LEX, reduced=True, verified=True))
    return result


def _same_ring(I: Ideal, f: Polynomial):
    if f.ring.variables != I.ring.variables or f.ring.field != I.ring.field:
        raise RingMismatch(f"{f} is not in {I.ring}", stage="idealops")


def saturate(I: Ideal, f: Polynomial, limits: Optional[ResourceLimits] = None) -> SaturationResult:
    """
    Saturation (I : f^∞) with its stabilisation exponent.

    Args:
        I: Ideal
        f: Nonzero polynomial
        limits: Resource ceilings

    Returns:
        (J, s) with J = (I : f^∞) and s the least exponent with (I : f^s) = J
    """
    if f.is_zero():
        raise InvalidParameter("cannot saturate by the zero polynomial", stage="saturate")
    _same_ring(I, f)
    limits = default_limits() if limits is None else limits
    ring = I.ring
    y = ring.fresh_name("y")
    big = ring.extend([y])
    gens = [g.embed(big) for g in I.generators]
    gens.append(big.one() - big.gen(y) * f.embed(big))
    J = _eliminate_fresh(gens, big, ring, limits)

    basis = I.groebner(limits)
    exponent = 0
    for g in J.generators:
        power = 0
        h = g
        while not basis.contains(h):
            h = h * f
            power += 1
            if power > limits.max_degree:
                raise ResourceLimitExceeded(f"saturation exponent exceeds {limits.max_degree}", stage="saturate")
        exponent = max(exponent, power)
    logger.debug(f"saturate: {len(J.generators)} generators, exponent {exponent}")
    return SaturationResult(J, exponent)


def intersect(I: Ideal, J: Ideal, limits: Optional[ResourceLimits] = None) -> Ideal:
    """I ∩ J via (t·I, (1 − t)·J) ∩ S."""
    if I.ring.variables != J.ring.variables or I.ring.field != J.ring.field:
        raise RingMismatch(f"cannot intersect ideals of {I.ring} and {J.ring}", stage="intersect")
    ring = I.ring
    t = ring.fresh_name("t")
    big = ring.extend([t])
    tt = big.gen(t)
    gens = [tt * g.embed(big) for g in I.generators]
    gens += [(big.one() - tt) * h.embed(big) for h in J.generators]
    return _eliminate_fresh(gens, big, ring, limits)


def intersect_all(ideals: Sequence[Ideal], limits: Optional[ResourceLimits] = None) -> Ideal:
    if not ideals:
        raise InvalidParameter("intersection of no ideals", stage="intersect")
    result = ideals[0]
    for other in ideals[1:]:
        result = intersect(result, other, limits)
    return result


def quotient(I: Ideal, f: Polynomial, s: int, limits: Optional[ResourceLimits] = None) -> Ideal:
    """
    (I : f^s) by s single quotients, each (I ∩ (f))·f⁻¹.
    """
    if s < 0:
        raise InvalidParameter(f"quotient exponent must be ≥ 0, got {s}", stage="quotient")
    _same_ring(I, f)
    ring = I.ring
    current = I
    for _ in range(s):
        if f.is_zero():
            return Ideal.unit(ring)
        meet = intersect(current, Ideal(ring, [f]), limits)
        gens = []
        for g in meet.generators:
            q = Polynomial(ring, g.terms).exact_quotient(f)
            if q is None:
                raise ResourceLimitExceeded(f"{g} is not divisible by {f}", stage="quotient")
            gens.append(q)
        current = Ideal(ring, gens)
    return current


def radical_member(f: Polynomial, I: Ideal, limits: Optional[ResourceLimits] = None) -> RadicalMembership:
    """
    Rabinowitsch test f ∈ √I, plus the least e with f^e ∈ I.

    The exponent is found by doubling until f^e ∈ I, then bisecting.
    """
    _same_ring(I, f)
    limits = default_limits() if limits is None else limits
    ring = I.ring
    y = ring.fresh_name("y")
    big = ring.extend([y])
    gens = [g.embed(big) for g in I.generators]
    gens.append(big.one() - big.gen(y) * f.embed(big))
    if not buchberger(gens, GRADED_LEX, ring=big, limits=limits).is_unit_ideal():
        return RadicalMembership(False, None)

    basis = I.groebner(limits)
    lo, hi = 0, 1
    while not basis.contains(f ** hi):
        lo, hi = hi, hi * 2
        if hi > limits.max_degree * 4:
            raise ResourceLimitExceeded(f"radical exponent search passed {hi}", stage="radical_member")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if basis.contains(f ** mid):
            hi = mid
        else:
            lo = mid
    return RadicalMembership(True, hi)


def head_coefficient(g: Polynomial, heavy: Iterable[int], order: MonomialOrder) -> Polynomial:
    """
    Leading coefficient of g viewed as a polynomial in the heavy variables with
    coefficients in the remaining ones.
    """
    heavy = set(heavy)
    lead = g.leading_monomial(order)

    def heavy_part(m: Monomial) -> Tuple[int, ...]:
        return tuple(e if i in heavy else 0 for i, e in enumerate(m))

    top = heavy_part(lead)
    terms = {}
    for m, c in g.terms.items():
        if heavy_part(m) == top:
            terms[tuple(0 if i in heavy else e for i, e in enumerate(m))] = c
    return Polynomial(g.ring, terms)


def contraction_data(I: Ideal, independent: Iterable[str], limits: Optional[ResourceLimits] = None) -> Contraction:
    """
    Contraction I^c = (I ⊗ K) ∩ S for K the rational function field in `independent`.

    A Gröbner basis under the block order (other variables heavy) yields head
    coefficients in the parameter subring; their lcm f gives I^c = (I : f^∞).
    """
    ring = I.ring
    params = {ring.index(name) for name in independent}
    if not params:
        if I.is_unit():
            raise NotProper("cannot contract the unit ideal", stage="contract")
        return Contraction(I, ring.one(), 0)
    heavy = [i for i in range(ring.nvars) if i not in params]
    order = block(heavy, sorted(params))
    basis = buchberger(I.generators, order, ring=ring, limits=limits)
    if basis.is_unit_ideal():
        raise NotProper("cannot contract the unit ideal", stage="contract")

    multiplier = ring.one()
    for g in basis:
        hc = head_coefficient(g, heavy, order)
        if not hc.is_constant():
            multiplier = poly_lcm(multiplier, Polynomial(ring, hc.terms))
    if multiplier.is_constant():
        return Contraction(I, ring.one(), 0)
    multiplier = multiplier.monic(GRADED_LEX)
    result = saturate(I, multiplier, limits)
    return Contraction(result.ideal, multiplier, result.exponent)


def contract(I: Ideal, independent: Iterable[str], limits: Optional[ResourceLimits] = None) -> Ideal:
    """I^c = (I ⊗_R K) ∩ S for the parameter variables `independent`."""
    return contraction_data(I, independent, limits).ideal
