"""
Krull dimension from leading monomials via maximal independent sets of variables.

A set X of variables is independent when no leading monomial of the basis has its
support inside X; dim S/I is the largest size of such a set.
"""

from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

from src.groebner.basis import GroebnerBasis
from src.polyalg.monomials import Monomial
from src.utils.errors import NotProper

_EMPTY = -1


def _support_masks(leads: Iterable[Monomial]) -> list:
    masks = []
    for m in leads:
        mask = 0
        for i, e in enumerate(m):
            if e:
                mask |= 1 << i
        masks.append(mask)
    return masks


def independent_sets_of_size(leads: Sequence[Monomial], n: int, size: int):
    """Yield the independent index sets of the given size in lexicographic order."""
    masks = _support_masks(leads)
    for subset in combinations(range(n), size):
        chosen = 0
        for i in subset:
            chosen |= 1 << i
        if all(mask & ~chosen for mask in masks):
            yield subset


def first_maximal_independent_set(leads: Sequence[Monomial], n: int) -> Optional[Tuple[int, ...]]:
    """Lexicographically first independent set of maximal size; None for the unit ideal."""
    if any(not any(m) for m in leads):
        return None
    for size in range(n, -1, -1):
        for subset in independent_sets_of_size(leads, n, size):
            return subset
    return None


def monomial_dimension(leads: Sequence[Monomial], n: int) -> int:
    """Dimension of the monomial ideal generated by `leads` (-1 if it contains 1)."""
    subset = first_maximal_independent_set(leads, n)
    return _EMPTY if subset is None else len(subset)


def dimension(basis: GroebnerBasis) -> int:
    """
    Krull dimension of S/I for a verified Gröbner basis.

    Returns:
        -1 when 1 ∈ I, otherwise a value in 0..n
    """
    basis.require_verified()
    return monomial_dimension(basis.leading_monomials(), basis.ring.nvars)


def max_independent_set(basis: GroebnerBasis) -> Tuple[str, ...]:
    """
    Variable names of the lexicographically first maximal independent set.

    Raises:
        NotProper: The basis generates the unit ideal
    """
    basis.require_verified()
    subset = first_maximal_independent_set(basis.leading_monomials(), basis.ring.nvars)
    if subset is None:
        raise NotProper("the unit ideal has no independent set", stage="dimension")
    return tuple(basis.ring.variables[i] for i in subset)
