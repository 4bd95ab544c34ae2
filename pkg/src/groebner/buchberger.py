"""
Buchberger's algorithm with the normal selection strategy and the
Gebauer–Möller pair criteria, plus reduced bases and d-bounded reduction.
"""

import logging
from typing import List, Optional, Sequence, Set, Tuple

from src.groebner.basis import GroebnerBasis
from src.groebner.bounds import within_dube_bound
from src.groebner.division import reduce, s_polynomial
from src.polyalg import monomials as mono
from src.polyalg.bounded import monomial_rank
from src.polyalg.monomials import Monomial, MonomialOrder
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.config import ResourceLimits, default_limits
from src.utils.errors import (
    DegreeBoundViolation,
    InvalidParameter,
    ResourceLimitExceeded,
    RingMismatch,
    UnboundedTerm,
)

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _update(
    G: List[Polynomial],
    leads: List[Monomial],
    P: Set[Pair],
    f: Polynomial,
    lead_f: Monomial,
    order: MonomialOrder,
) -> Set[Pair]:
    """Add f to the basis and return the surviving pair set (Gebauer–Möller)."""
    lcm = mono.lcm
    k = len(G)

    # drop old pairs whose lcm is strictly divisible by in(f)
    kept = set()
    for i, j in P:
        l_ij = lcm(leads[i], leads[j])
        if (
            not mono.divides(lead_f, l_ij)
            or l_ij == lcm(leads[i], lead_f)
            or l_ij == lcm(leads[j], lead_f)
        ):
            kept.add((i, j))

    # new pairs: one representative per minimal lcm, none where the product criterion applies
    by_lcm = {}
    for i in range(k):
        by_lcm.setdefault(lcm(leads[i], lead_f), []).append(i)
    minimal: List[Monomial] = []
    for L in sorted(by_lcm, key=order.key):
        if all(not mono.divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        if not any(mono.is_coprime(leads[i], lead_f) for i in by_lcm[L]):
            kept.add((min(by_lcm[L]), k))

    G.append(f)
    leads.append(lead_f)
    return kept


def _minimalize(G: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Keep only elements whose leading monomial is not divisible by another's."""
    result: List[Polynomial] = []
    for g in sorted(G, key=lambda p: order.key(p.leading_monomial(order))):
        lead = g.leading_monomial(order)
        if all(not mono.divides(h.leading_monomial(order), lead) for h in result):
            result.append(g)
    return result


def _interreduce(G: List[Polynomial], order: MonomialOrder) -> List[Polynomial]:
    """Fully reduce each element by the others and make it monic."""
    result: List[Polynomial] = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        lead_m, lead_c = g.leading_term(order)
        tail = Polynomial(g.ring, {m: c for m, c in g.terms.items() if m != lead_m})
        reduced_tail = reduce(tail, others, order)
        h = reduced_tail + Polynomial(g.ring, {lead_m: lead_c})
        result.append(h.monic(order))
    return result


def _check_limits(h: Polynomial, size: int, pairs_done: int, limits: ResourceLimits):
    if h.total_degree() > limits.max_degree:
        raise ResourceLimitExceeded(
            f"intermediate polynomial of degree {h.total_degree()} exceeds the degree limit {limits.max_degree}",
            stage="buchberger",
        )
    if size > limits.max_basis_size:
        raise ResourceLimitExceeded(
            f"intermediate basis has {size} elements, limit is {limits.max_basis_size}", stage="buchberger"
        )
    if pairs_done > limits.max_pairs:
        raise ResourceLimitExceeded(f"processed more than {limits.max_pairs} S-pairs", stage="buchberger")


def buchberger(
    generators: Sequence[Polynomial],
    order: Optional[MonomialOrder] = None,
    ring: Optional[PolyRing] = None,
    auto_reduce: bool = True,
    limits: Optional[ResourceLimits] = None,
) -> GroebnerBasis:
    """
    Compute a Gröbner basis of the ideal generated by `generators`.

    Args:
        generators: Ideal generators (zeros allowed)
        order: Monomial order (defaults to the ring's order)
        ring: Ambient ring, required when every generator is zero
        auto_reduce: Return the unique reduced basis
        limits: Resource ceilings (defaults to the environment's)

    Returns:
        A verified GroebnerBasis

    Raises:
        ResourceLimitExceeded: A degree, size or pair ceiling was hit
    """
    if ring is None:
        if not generators:
            raise InvalidParameter("buchberger needs a ring when no generators are given", stage="buchberger")
        ring = generators[0].ring
    order = ring.order if order is None else order
    order.validate(ring.nvars)
    limits = default_limits() if limits is None else limits

    inputs = [g for g in generators if not g.is_zero()]
    for g in inputs:
        if g.ring.variables != ring.variables or g.ring.field != ring.field:
            raise RingMismatch(f"generator {g} does not live in {ring}", stage="buchberger")
    logger.debug(f"buchberger: {len(inputs)} generators in {ring}, order {order}")

    G: List[Polynomial] = []
    leads: List[Monomial] = []
    P: Set[Pair] = set()
    for f in inputs:
        f = f.monic(order)
        P = _update(G, leads, P, f, f.leading_monomial(order), order)

    pairs_done = 0
    while P:
        # normal strategy: smallest lcm first, ties by newest element then oldest partner
        pair = min(P, key=lambda p: (order.key(mono.lcm(leads[p[0]], leads[p[1]])), p[1], p[0]))
        P.remove(pair)
        pairs_done += 1
        h = reduce(s_polynomial(G[pair[0]], G[pair[1]], order), G, order)
        if not h.is_zero():
            h = h.monic(order)
            _check_limits(h, len(G) + 1, pairs_done, limits)
            if not any(h.leading_monomial(order)):
                G, leads, P = [h], [h.leading_monomial(order)], set()
                break
            P = _update(G, leads, P, h, h.leading_monomial(order), order)

    if auto_reduce and G:
        G = _interreduce(_minimalize(G, order), order)
        G.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
        _check_dube(inputs, G, ring.nvars)

    logger.debug(f"buchberger: {pairs_done} pairs, basis of {len(G)} elements")
    return GroebnerBasis(ring, G, order, reduced=auto_reduce, verified=True)


def _check_dube(inputs: Sequence[Polynomial], output: Sequence[Polynomial], n: int):
    d = max((g.total_degree() for g in inputs), default=0)
    top = max((g.total_degree() for g in output), default=0)
    if d >= 1 and not within_dube_bound(top, d, n):
        raise DegreeBoundViolation(
            f"reduced basis has degree {top}, above the bound 2d^(2^n) for d={d}, n={n}", stage="buchberger"
        )


def reduce_to_d_bounded(basis: GroebnerBasis, d: int, pad: bool = False) -> GroebnerBasis:
    """
    Shrink a d-bounded Gröbner basis to at most d nonzero elements.

    Whenever two elements share a leading monomial, the later one g is replaced by
    g − λf. Positions are kept (eliminated elements become zero); with more than d
    entries trailing zeros are dropped, and `pad` fills up to exactly d entries.

    Raises:
        UnboundedTerm: Some element is not d-bounded
    """
    if d < 1:
        raise InvalidParameter(f"d must be positive, got {d}", stage="groebner")
    for g in basis.generators:
        for m in g.terms:
            rank = monomial_rank(m)
            if rank > d:
                raise UnboundedTerm(m, rank, d)

    order = basis.order
    fld = basis.ring.field
    elements = list(basis.generators)
    changed = True
    while changed:
        changed = False
        seen = {}
        for index, g in enumerate(elements):
            if g.is_zero():
                continue
            lead_m, lead_c = g.leading_term(order)
            if lead_m in seen:
                f = elements[seen[lead_m]]
                factor = fld.divide(lead_c, f.leading_coefficient(order))
                elements[index] = g - f.scale(factor)
                changed = True
                break
            seen[lead_m] = index

    if len(elements) > d:
        nonzero = [g for g in elements if not g.is_zero()]
        zeros = [g for g in elements if g.is_zero()]
        elements = nonzero + zeros[: max(0, d - len(nonzero))]
    if pad:
        elements += [basis.ring.zero()] * (d - len(elements))
    return GroebnerBasis(basis.ring, elements, order, reduced=False, verified=basis.verified)
