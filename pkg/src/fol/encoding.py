"""
Flat coefficient vectors for concrete polynomials, bases, structure maps and
quadruples, in the free-variable order used by the formula builders.
"""

from typing import List, Optional, Sequence, Tuple

from src.fol.evaluator import Assignment
from src.fol.formula import Formula
from src.groebner import GroebnerBasis, buchberger
from src.hopf.quadruple import HopfQuadruple
from src.polyalg.bounded import bound_of_all, monomial_rank, to_bounded
from src.polyalg.fields import Coefficient
from src.polyalg.monomials import GRADED_LEX
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.config import ResourceLimits
from src.utils.errors import InvalidParameter, UnboundedTerm


def polynomial_values(f: Polynomial, d: int) -> List[Coefficient]:
    return list(to_bounded(f, d).coeffs)


def basis_values(polys: Sequence[Polynomial], d: int, ring: PolyRing) -> List[Coefficient]:
    """d × d values: the list padded with zero polynomials to length d."""
    if len(polys) > d:
        raise InvalidParameter(f"a {d}-bounded list holds at most {d} polynomials, got {len(polys)}", stage="fol")
    padded = list(polys) + [ring.zero()] * (d - len(polys))
    out: List[Coefficient] = []
    for g in padded:
        out.extend(polynomial_values(g, d))
    return out


def _split(m: Tuple[int, ...], n: int, r: int) -> List[Tuple[int, ...]]:
    return [m[j * n:(j + 1) * n] for j in range(r)]


def tensor_values(image: Polynomial, n: int, r: int, d: int) -> List[Coefficient]:
    """
    Coefficients of an element of S^{⊗r} on 𝗆_{j₁}⊗…⊗𝗆_{j_r}, j₁ varying slowest.

    Raises:
        UnboundedTerm: Some tensor factor of a term lies beyond 𝗆_d
    """
    field = image.ring.field
    values = [field.zero] * (d ** r)
    for m, c in image.terms.items():
        index = 0
        for chunk in _split(m, n, r):
            rank = monomial_rank(chunk)
            if rank > d:
                raise UnboundedTerm(chunk, rank, d)
            index = index * d + (rank - 1)
        values[index] = c
    return values


def counit_values(H: HopfQuadruple) -> List[Coefficient]:
    return list(H.counit_point())


def groebner_relations(H: HopfQuadruple, limits: Optional[ResourceLimits] = None) -> GroebnerBasis:
    """Reduced GradedLex basis of the quadruple's ideal."""
    return buchberger(H.relations, GRADED_LEX, ring=H.ring.with_order(GRADED_LEX), limits=limits)


def quadruple_bound(H: HopfQuadruple, basis: GroebnerBasis) -> int:
    """Least d for which the basis, its length and every structure map are d-bounded."""
    polys = basis.nonzero()
    return max(H.d_bound(), bound_of_all(polys), len(polys), 1)


def quadruple_values(H: HopfQuadruple, d: int, basis: GroebnerBasis) -> List[Coefficient]:
    """𝓑, Δ, σ, ε in the order of the η builder: d² + n(d² + d + 1) values."""
    n = H.nvars
    values = basis_values(basis.nonzero(), d, H.ring)
    for image in H.comultiplication_images():
        values.extend(tensor_values(image, n, 2, d))
    for image in H.antipode_images():
        values.extend(tensor_values(image, n, 1, d))
    values.extend(counit_values(H))
    return values


def smoothness_values(H: HopfQuadruple, d: int, basis: GroebnerBasis) -> List[Coefficient]:
    """𝓑 and ε in the order of the τ and θ builders: d² + n values."""
    return basis_values(basis.nonzero(), d, H.ring) + counit_values(H)


def assign(F: Formula, values: Sequence[Coefficient], ring: PolyRing) -> Assignment:
    return Assignment.for_formula(F, values, ring.field)
