"""
Hopf-axiom verification for quadruples.

The structure maps are given on the generators xᵢ, so each axiom is checked per
generator modulo J_r = (𝓑_r), the ideal of (S/I)^{⊗r} inside S^{⊗r}.
"""

import logging
from typing import List, Optional, Sequence

from src.groebner import GroebnerBasis, buchberger, member
from src.hopf.quadruple import HopfQuadruple, factor_images, tensor_ring, to_factors
from src.polyalg.monomials import GRADED_LEX
from src.polyalg.polynomial import PolyRing, Polynomial
from src.utils.config import ResourceLimits
from src.utils.errors import InvalidParameter, InvalidQuadruple

logger = logging.getLogger(__name__)


class AxiomFailure:
    """One failed axiom instance, with the generator or relation it failed on."""

    def __init__(self, code: str, message: str, generator: Optional[str] = None):
        """
        Initialize an axiom failure.

        Args:
            code: Failure code (e.g. COASSOCIATIVITY)
            message: Human-readable explanation
            generator: Variable or relation the check failed for
        """
        self.code = code
        self.message = message
        self.generator = generator

    def to_dict(self) -> dict:
        return {"code": self.code, "message": self.message, "generator": self.generator}

    def __repr__(self):
        return f"AxiomFailure(code='{self.code}', message='{self.message}', generator='{self.generator}')"

    def __eq__(self, other):
        if not isinstance(other, AxiomFailure):
            return False
        return self.code == other.code and self.message == other.message and self.generator == other.generator


class HopfCheckResult:
    """Result of the Hopf-axiom check."""

    def __init__(self):
        self.errors: List[AxiomFailure] = []

    @property
    def is_valid(self) -> bool:
        """Returns True if every axiom holds."""
        return len(self.errors) == 0

    def add_error(self, code: str, message: str, generator: Optional[str] = None):
        self.errors.append(AxiomFailure(code, message, generator))

    def codes(self) -> List[str]:
        return [failure.code for failure in self.errors]

    def __bool__(self):
        return self.is_valid

    def __repr__(self):
        return f"HopfCheckResult(is_valid={self.is_valid}, errors={len(self.errors)})"


def tensor_presentation(relations: Sequence[Polynomial], ring: PolyRing, r: int) -> List[Polynomial]:
    """
    𝓑_r = {fᵢ(x_{j,1},…,x_{j,n}) : fᵢ ∈ 𝓑, 1 ≤ j ≤ r}, generators of J_r in S^{⊗r}.
    """
    if r < 1:
        raise InvalidParameter(f"tensor power must be ≥ 1, got {r}", stage="hopf")
    target = tensor_ring(ring, r)
    out = []
    for j in range(1, r + 1):
        images = factor_images(ring, r, j)
        out.extend(f.substitute(images, target=target) for f in relations)
    return out


def tensor_basis(basis: GroebnerBasis, r: int) -> GroebnerBasis:
    """
    Gröbner basis of J_r from a GradedLex Gröbner basis of I.

    Copies in disjoint variables keep their leading monomials and pairs across
    copies have coprime leading monomials, so the union is again a Gröbner basis.
    """
    basis.require_verified()
    if basis.order != GRADED_LEX:
        raise InvalidParameter("tensor bases need a GradedLex basis", stage="hopf")
    ring = basis.ring
    gens = tensor_presentation(basis.nonzero(), ring, r)
    return GroebnerBasis(tensor_ring(ring, r), gens, GRADED_LEX, reduced=basis.reduced, verified=True)


def factors_through(
    images,
    relations: Sequence[Polynomial],
    ring: PolyRing,
    r: int,
    limits: Optional[ResourceLimits] = None,
    basis: Optional[GroebnerBasis] = None,
) -> bool:
    """
    Does xᵢ ↦ images[i] induce a homomorphism S/I → (S/I)^{⊗r}?

    Args:
        images: One polynomial of S^{⊗r} per variable, or for r = 0 the counit point
        relations: Generators of I
        ring: S
        r: Tensor power (0 means the counit)
        limits: Resource ceilings
        basis: Optional precomputed GradedLex Gröbner basis of I

    Returns:
        True iff every fᵢ is sent into J_r
    """
    if r == 0:
        return all(f.evaluate(list(images)) == 0 for f in relations)
    if not relations:
        return True
    if basis is None:
        basis = buchberger(relations, GRADED_LEX, ring=ring.with_order(GRADED_LEX), limits=limits)
    J = tensor_basis(basis, r)
    target = tensor_ring(ring, r)
    return all(member(f.substitute(list(images), target=target), J) for f in relations)


def _counit_images(H: HopfQuadruple) -> List[Polynomial]:
    return [H.ring.constant(c) for c in H.counit_point()]


def check_hopf(H: HopfQuadruple, limits: Optional[ResourceLimits] = None) -> HopfCheckResult:
    """
    Check every Hopf axiom of a quadruple and report all failures.

    Well-definedness of Δ (into J₂), σ (into J₁) and ε (vanishing of 𝓑 at ε) comes
    first; coassociativity is tested in J₃, the counit and antipode laws in J₁.
    """
    ring = H.ring
    result = HopfCheckResult()
    if not H.field.is_field:
        result.add_error("NOT_A_FIELD", f"structure maps over {H.field} need a base change to a field")
        return result

    basis = buchberger(H.relations, GRADED_LEX, ring=ring.with_order(GRADED_LEX), limits=limits)
    J1 = basis
    J2 = tensor_basis(basis, 2)
    J3 = tensor_basis(basis, 3)
    delta = H.comultiplication_images()
    sigma = H.antipode_images()
    eps = H.counit_point()
    double = tensor_ring(ring, 2)
    triple = tensor_ring(ring, 3)

    for f in H.relations:
        if not member(f.substitute(delta, target=double), J2):
            result.add_error("COMULTIPLICATION_NOT_WELL_DEFINED", f"Δ({f}) is not in J₂", str(f))
        if not member(f.substitute(sigma, target=ring), J1):
            result.add_error("ANTIPODE_NOT_WELL_DEFINED", f"σ({f}) is not in J₁", str(f))
        if f.evaluate(eps) != 0:
            result.add_error("COUNIT_NOT_ON_SCHEME", f"{f} does not vanish at ε", str(f))
    if not result.is_valid:
        return result

    # images of x under (Δ⊗id) and (id⊗Δ) inside S^{⊗3}
    left_delta = [to_factors(g, ring, 3, (1, 2)) for g in delta]
    right_delta = [to_factors(g, ring, 3, (2, 3)) for g in delta]
    left_images = left_delta + factor_images(ring, 3, 3)
    right_images = factor_images(ring, 3, 1) + right_delta

    counit_consts = _counit_images(H)
    identity = ring.gens()

    for v, g in zip(ring.variables, delta):
        lhs = g.substitute(left_images, target=triple)
        rhs = g.substitute(right_images, target=triple)
        if not member(lhs - rhs, J3):
            result.add_error("COASSOCIATIVITY", f"(Δ⊗id)Δ({v}) ≠ (id⊗Δ)Δ({v}) modulo J₃", v)

        x = ring.gen(v)
        if not member(g.substitute(counit_consts + identity, target=ring) - x, J1):
            result.add_error("COUNIT_LEFT", f"(ε⊗id)Δ({v}) ≠ {v}", v)
        if not member(g.substitute(identity + counit_consts, target=ring) - x, J1):
            result.add_error("COUNIT_RIGHT", f"(id⊗ε)Δ({v}) ≠ {v}", v)

        unit = ring.constant(H.counit[v])
        if not member(g.substitute(sigma + identity, target=ring) - unit, J1):
            result.add_error("ANTIPODE_LEFT", f"m(σ⊗id)Δ({v}) ≠ ε({v})", v)
        if not member(g.substitute(identity + sigma, target=ring) - unit, J1):
            result.add_error("ANTIPODE_RIGHT", f"m(id⊗σ)Δ({v}) ≠ ε({v})", v)

    logger.debug(f"check_hopf: {H.name or ring}: {len(result.errors)} failures")
    return result


def is_hopf(H: HopfQuadruple, limits: Optional[ResourceLimits] = None) -> bool:
    """True iff (S/I, Δ, σ, ε) is a Hopf algebra; the verdict is cached on the quadruple."""
    if H._check is None:
        H._check = check_hopf(H, limits)
    return H._check.is_valid


def require_hopf(H: HopfQuadruple, limits: Optional[ResourceLimits] = None) -> HopfCheckResult:
    """
    Raises:
        InvalidQuadruple: Some axiom fails; the exception carries the full report
    """
    if not is_hopf(H, limits):
        report = H._check
        raise InvalidQuadruple(
            f"{H.name or 'quadruple'} is not a Hopf algebra: {', '.join(report.codes())}", report
        )
    return H._check
