"""
The enumeration 𝗆₁ = 1, 𝗆₂, … of monomials and d-bounded encodings.

Within total degree t, exponent vectors are ordered lexicographically with x₁ most
significant, so the enumeration is order-isomorphic to GradedLex:

    rank(m) = Σ_{s < deg m} C(s+n−1, n−1) + (position of m within its degree, 1-based)
"""

from dataclasses import dataclass
from math import comb
from typing import List, Sequence, Tuple

from src.polyalg.fields import Coefficient
from src.polyalg.monomials import Monomial
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.errors import InvalidParameter, UnboundedTerm


def count_of_degree(t: int, n: int) -> int:
    """Number of monomials of total degree t in n variables."""
    if n == 0:
        return 1 if t == 0 else 0
    return comb(t + n - 1, n - 1)


def count_up_to_degree(t: int, n: int) -> int:
    """Number of monomials of total degree ≤ t in n variables."""
    if t < 0:
        return 0
    return comb(t + n, n)


def monomial_rank(m: Monomial) -> int:
    """Position of m in the enumeration 𝗆₁, 𝗆₂, … (rank(1) = 1)."""
    n = len(m)
    t = sum(m)
    rank = count_up_to_degree(t - 1, n)
    # count degree-t monomials that are lex-smaller than m
    remaining = t
    for i, a in enumerate(m):
        rest = n - i - 1
        for b in range(a):
            left = remaining - b
            if rest == 0:
                rank += 1 if left == 0 else 0
            else:
                rank += count_of_degree(left, rest)
        remaining -= a
    return rank + 1


def monomial_unrank(k: int, n: int) -> Monomial:
    """Inverse of monomial_rank: the k-th monomial in n variables."""
    if k < 1:
        raise InvalidParameter(f"monomial index must be ≥ 1, got {k}", stage="bounded")
    if n == 0:
        if k != 1:
            raise InvalidParameter("only one monomial exists in zero variables", stage="bounded")
        return ()
    position = k - 1
    t = 0
    while position >= count_of_degree(t, n):
        position -= count_of_degree(t, n)
        t += 1
    exps: List[int] = []
    remaining = t
    for i in range(n - 1):
        rest = n - i - 1
        b = 0
        while True:
            block = count_of_degree(remaining - b, rest)
            if position < block:
                break
            position -= block
            b += 1
        exps.append(b)
        remaining -= b
    exps.append(remaining)
    return tuple(exps)


def first_monomials(d: int, n: int) -> List[Monomial]:
    """𝗆₁, …, 𝗆_d."""
    return [monomial_unrank(k, n) for k in range(1, d + 1)]


@dataclass(frozen=True)
class BoundedPoly:
    """Dense coefficient vector (λ₁,…,λ_d) over 𝗆₁,…,𝗆_d."""

    d: int
    coeffs: Tuple[Coefficient, ...]

    def __post_init__(self):
        if self.d < 1 or len(self.coeffs) != self.d:
            raise InvalidParameter(f"bounded vector must have length d={self.d}", stage="bounded")


def to_bounded(f: Polynomial, d: int) -> BoundedPoly:
    """
    Encode f as a d-bounded coefficient vector.

    Raises:
        UnboundedTerm: A term of f lies beyond 𝗆_d
    """
    if d < 1:
        raise InvalidParameter(f"d must be positive, got {d}", stage="bounded")
    zero = f.ring.field.zero
    coeffs = [zero] * d
    for m, c in f.terms.items():
        rank = monomial_rank(m)
        if rank > d:
            raise UnboundedTerm(m, rank, d)
        coeffs[rank - 1] = c
    return BoundedPoly(d, tuple(coeffs))


def from_bounded(b: BoundedPoly, ring: PolyRing) -> Polynomial:
    n = ring.nvars
    return Polynomial(ring, {monomial_unrank(k + 1, n): c for k, c in enumerate(b.coeffs) if c})


def bound_of(f: Polynomial) -> int:
    """Least d for which f is d-bounded (1 for the zero polynomial)."""
    return max((monomial_rank(m) for m in f.terms), default=1)


def bound_of_all(polys: Sequence[Polynomial]) -> int:
    return max((bound_of(f) for f in polys), default=1)
