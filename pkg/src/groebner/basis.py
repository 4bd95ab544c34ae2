"""
The GroebnerBasis container and ideal membership.
"""

from typing import Iterator, List, Optional, Sequence, Tuple

from src.groebner.division import divide, product_criterion, reduce, s_polynomial
from src.polyalg.monomials import Monomial, MonomialOrder
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.errors import BasisNotVerified, RingMismatch


def is_groebner(basis: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> bool:
    """
    Buchberger's criterion: every S-pair remainder vanishes.

    Zero entries are ignored and pairs with coprime leading monomials are skipped.
    """
    nonzero = [g for g in basis if not g.is_zero()]
    if not nonzero:
        return True
    order = nonzero[0].ring.order if order is None else order
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            g_i, g_j = nonzero[i], nonzero[j]
            if product_criterion(g_i, g_j, order):
                continue
            if not reduce(s_polynomial(g_i, g_j, order), nonzero, order).is_zero():
                return False
    return True


class GroebnerBasis:
    """
    An ordered list of generators tagged with its monomial order.

    `verified` is set by buchberger or by `GroebnerBasis.verify`; membership and
    dimension queries refuse unverified bases.
    """

    def __init__(
        self,
        ring: PolyRing,
        generators: Sequence[Polynomial],
        order: MonomialOrder,
        reduced: bool = False,
        verified: bool = False,
    ):
        for g in generators:
            if g.ring.variables != ring.variables or g.ring.field != ring.field:
                raise RingMismatch(f"generator {g} does not live in {ring}", stage="groebner")
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(generators)
        self.order = order
        self.reduced = reduced
        self.verified = verified

    @classmethod
    def verify(cls, ring: PolyRing, generators: Sequence[Polynomial], order: Optional[MonomialOrder] = None) -> "GroebnerBasis":
        """Wrap a user-supplied list after checking Buchberger's criterion."""
        order = ring.order if order is None else order
        if not is_groebner(generators, order):
            raise BasisNotVerified("the supplied list is not a Gröbner basis", stage="groebner")
        return cls(ring, generators, order, reduced=False, verified=True)

    def require_verified(self):
        if not self.verified:
            raise BasisNotVerified("operation needs a verified Gröbner basis", stage="groebner")

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, index: int) -> Polynomial:
        return self.generators[index]

    def nonzero(self) -> List[Polynomial]:
        return [g for g in self.generators if not g.is_zero()]

    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.nonzero()]

    def is_unit_ideal(self) -> bool:
        self.require_verified()
        return any(not any(m) for m in self.leading_monomials())

    def is_zero_ideal(self) -> bool:
        return not self.nonzero()

    def reduce(self, f: Polynomial) -> Polynomial:
        return divide(f, self.nonzero(), self.order).remainder

    def contains(self, f: Polynomial) -> bool:
        return member(f, self)

    def max_degree(self) -> int:
        return max((g.total_degree() for g in self.nonzero()), default=0)

    def to_strings(self) -> List[str]:
        return [str(g) for g in self.generators]

    def fingerprint(self) -> str:
        """Canonical text identity of a reduced basis."""
        return "; ".join(sorted(str(g) for g in self.nonzero()))

    def __eq__(self, other):
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.generators == other.generators and self.order == other.order

    def __hash__(self):
        return hash((self.generators, self.order))

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(self.to_strings())}], order={self.order}, reduced={self.reduced})"


def member(f: Polynomial, basis: GroebnerBasis) -> bool:
    """True iff f lies in the ideal generated by a verified Gröbner basis."""
    basis.require_verified()
    if f.ring.variables != basis.ring.variables or f.ring.field != basis.ring.field:
        raise RingMismatch(f"{f} is not in {basis.ring}", stage="member")
    if f.is_zero():
        return True
    return basis.reduce(f).is_zero()
