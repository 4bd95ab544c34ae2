"""
Ideals with a lazily computed, cached Gröbner basis.
"""

from typing import Iterable, List, Optional, Sequence

from src.groebner import GroebnerBasis, buchberger, dimension, member
from src.polyalg.monomials import GRADED_LEX
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.config import ResourceLimits
from src.utils.errors import BasisNotVerified, RingMismatch


class Ideal:
    """An ideal of a polynomial ring given by generators."""

    def __init__(self, ring: PolyRing, generators: Iterable[Polynomial], basis: Optional[GroebnerBasis] = None):
        """
        Initialize an ideal.

        Args:
            ring: Ambient ring
            generators: Generators (zeros are dropped)
            basis: Optional Gröbner basis of the same ideal; attached after a cross-membership check
        """
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring.variables != ring.variables or g.ring.field != ring.field:
                raise RingMismatch(f"generator {g} does not live in {ring}", stage="ideal")
            if not g.is_zero():
                gens.append(g)
        self.generators: List[Polynomial] = gens
        self._basis: Optional[GroebnerBasis] = None
        if basis is not None:
            self.attach_basis(basis)

    @classmethod
    def from_strings(cls, ring: PolyRing, texts: Sequence[str]) -> "Ideal":
        return cls(ring, [ring.parse(text) for text in texts])

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    def attach_basis(self, basis: GroebnerBasis):
        """Cache a Gröbner basis once both generating sets are shown to generate the same ideal."""
        basis.require_verified()
        if not all(member(g, basis) for g in self.generators):
            raise BasisNotVerified("attached basis does not contain the generators", stage="ideal")
        if self.generators:
            own = buchberger(self.generators, basis.order, ring=self.ring)
            if not all(member(g, own) for g in basis.nonzero()):
                raise BasisNotVerified("attached basis generates a larger ideal", stage="ideal")
        elif basis.nonzero():
            raise BasisNotVerified("attached basis generates a larger ideal", stage="ideal")
        self._basis = basis

    def groebner(self, limits: Optional[ResourceLimits] = None) -> GroebnerBasis:
        """Reduced GradedLex Gröbner basis (cached)."""
        if self._basis is None or self._basis.order != GRADED_LEX or not self._basis.reduced:
            self._basis = buchberger(self.generators, GRADED_LEX, ring=self.ring.with_order(GRADED_LEX), limits=limits)
        return self._basis

    def _set_basis_unchecked(self, basis: GroebnerBasis):
        self._basis = basis

    def contains(self, f: Polynomial) -> bool:
        return member(f, self.groebner())

    def contains_ideal(self, other: "Ideal") -> bool:
        basis = self.groebner()
        return all(member(g, basis) for g in other.generators)

    def equals(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def is_unit(self) -> bool:
        return self.groebner().is_unit_ideal()

    def is_zero(self) -> bool:
        return not self.generators

    def dimension(self) -> int:
        return dimension(self.groebner())

    def reduced_generators(self) -> List[Polynomial]:
        return self.groebner().nonzero()

    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring.variables != self.ring.variables or other.ring.field != self.ring.field:
            raise RingMismatch(f"cannot add ideals of {self.ring} and {other.ring}", stage="ideal")
        return Ideal(self.ring, self.generators + other.generators)

    def with_generators(self, extra: Iterable[Polynomial]) -> "Ideal":
        return Ideal(self.ring, self.generators + list(extra))

    def fingerprint(self) -> str:
        """Canonical identity: the sorted reduced GradedLex basis."""
        return self.groebner().fingerprint()

    def to_strings(self) -> List[str]:
        return [str(g) for g in self.reduced_generators()]

    def __repr__(self):
        return f"Ideal([{', '.join(str(g) for g in self.generators)}] in {self.ring})"
