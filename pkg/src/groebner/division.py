"""
The multivariate division algorithm and S-pair cofactors.
"""

import heapq
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.polyalg import monomials as mono
from src.polyalg.fields import Coefficient
from src.polyalg.monomials import Monomial, MonomialOrder
from src.polyalg.polynomial import Polynomial
from src.utils.errors import InvalidParameter


@dataclass(frozen=True)
class DivisionResult:
    """f = Σ qᵢ gᵢ + remainder, no term of the remainder divisible by any in(gᵢ)."""

    quotients: Tuple[Polynomial, ...]
    remainder: Polynomial


def _negated_key(order: MonomialOrder, m: Monomial):
    return tuple(-k for k in order.key(m))


def divide(f: Polynomial, divisors: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> DivisionResult:
    """
    Divide f by an ordered list of polynomials.

    The largest remaining term is always treated first; it is reduced by the first
    divisor whose leading monomial divides it, otherwise it moves to the remainder.
    Zero divisors are skipped.

    Args:
        f: Dividend
        divisors: Ordered divisors (same ring as f)
        order: Monomial order (defaults to the ring's order)

    Returns:
        DivisionResult with one quotient per divisor
    """
    ring = f.ring
    order = ring.order if order is None else order
    for g in divisors:
        f._check_ring(g)
    fld = ring.field
    norm = fld.normalize

    leads = []
    for i, g in enumerate(divisors):
        if not g.is_zero():
            lm, lc = g.leading_term(order)
            leads.append((i, lm, fld.inverse(lc), g.terms))

    quotients: List[Dict[Monomial, Coefficient]] = [{} for _ in divisors]
    remainder: Dict[Monomial, Coefficient] = {}
    rest: Dict[Monomial, Coefficient] = dict(f.terms)
    heap = [(_negated_key(order, m), m) for m in rest]
    heapq.heapify(heap)

    while heap:
        _, m = heapq.heappop(heap)
        c = rest.pop(m, None)
        if c is None:
            continue
        for i, lm, inv, g_terms in leads:
            if mono.divides(lm, m):
                q_m = mono.div(m, lm)
                q_c = norm(c * inv)
                quotient = quotients[i]
                quotient[q_m] = norm(quotient.get(q_m, 0) + q_c)
                for gm, gc in g_terms.items():
                    if gm == lm:
                        continue
                    t = mono.mul(gm, q_m)
                    previous = rest.get(t)
                    value = norm((previous or 0) - q_c * gc)
                    if value:
                        rest[t] = value
                        if previous is None:
                            heapq.heappush(heap, (_negated_key(order, t), t))
                    elif previous is not None:
                        del rest[t]
                break
        else:
            remainder[m] = c

    return DivisionResult(tuple(Polynomial(ring, q) for q in quotients), Polynomial(ring, remainder))


def reduce(f: Polynomial, divisors: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> Polynomial:
    """Remainder of f on division by the divisors."""
    return divide(f, divisors, order).remainder


def s_pair_data(g_i: Polynomial, g_j: Polynomial, order: Optional[MonomialOrder] = None) -> Tuple[Polynomial, Polynomial]:
    """
    Cofactors (m_ij, m_ji) with m_ji·g_i − m_ij·g_j cancelling the leading terms.

    m_ij = lc(g_i)·in(g_i)/gcd(in(g_i), in(g_j)) and symmetrically for m_ji.
    """
    if g_i.is_zero() or g_j.is_zero():
        raise InvalidParameter("S-pair of a zero polynomial", stage="groebner")
    g_i._check_ring(g_j)
    ring = g_i.ring
    lm_i, lc_i = g_i.leading_term(order)
    lm_j, lc_j = g_j.leading_term(order)
    common = mono.gcd(lm_i, lm_j)
    m_ij = Polynomial(ring, {mono.div(lm_i, common): lc_i})
    m_ji = Polynomial(ring, {mono.div(lm_j, common): lc_j})
    return m_ij, m_ji


def s_polynomial(g_i: Polynomial, g_j: Polynomial, order: Optional[MonomialOrder] = None) -> Polynomial:
    m_ij, m_ji = s_pair_data(g_i, g_j, order)
    return m_ji * g_i - m_ij * g_j


def product_criterion(g_i: Polynomial, g_j: Polynomial, order: Optional[MonomialOrder] = None) -> bool:
    """True when the leading monomials are coprime, so the pair reduces to zero."""
    return mono.is_coprime(g_i.leading_monomial(order), g_j.leading_monomial(order))
