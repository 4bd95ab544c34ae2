"""
Elimination ideals.
"""

import logging
from typing import Iterable, Optional, Sequence

from src.groebner.basis import GroebnerBasis
from src.groebner.buchberger import buchberger
from src.polyalg.monomials import GRADED_LEX, elimination_order, lex
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.config import ResourceLimits
from src.utils.errors import InvalidParameter

logger = logging.getLogger(__name__)


def eliminate(
    generators: Sequence[Polynomial],
    keep: Iterable[str],
    ring: Optional[PolyRing] = None,
    use_lex: bool = False,
    limits: Optional[ResourceLimits] = None,
) -> GroebnerBasis:
    """
    Gröbner basis of (generators) ∩ k[keep].

    The basis is computed under an order where every monomial outside the kept
    subring is larger than every monomial inside it (a block order by default, pure
    Lex with `use_lex`), then intersected with the subring.

    Args:
        generators: Ideal generators
        keep: Names of the variables to keep
        ring: Ambient ring (required when there are no generators)
        use_lex: Use pure Lex instead of the block order
        limits: Resource ceilings

    Returns:
        Reduced Gröbner basis living in the subring on the kept variables
    """
    if ring is None:
        if not generators:
            raise InvalidParameter("eliminate needs a ring when no generators are given", stage="eliminate")
        ring = generators[0].ring
    keep_names = set(keep)
    keep_indices = {ring.index(name) for name in keep_names}
    eliminated = [i for i in range(ring.nvars) if i not in keep_indices]
    subring = ring.subring(keep_names)

    if not eliminated:
        return buchberger(generators, GRADED_LEX, ring=ring.with_order(GRADED_LEX), limits=limits)

    order = elimination_order(ring.nvars, eliminated, use_lex=use_lex)
    basis = buchberger(generators, order, ring=ring, limits=limits)
    kept = [g.restrict(subring) for g in basis if all(i in keep_indices for i in g.support_indices())]
    logger.debug(f"eliminate: kept {len(kept)} of {len(basis)} basis elements in {subring}")
    sub_order = lex() if use_lex else GRADED_LEX
    return GroebnerBasis(subring.with_order(sub_order), kept, sub_order, reduced=True, verified=True)
