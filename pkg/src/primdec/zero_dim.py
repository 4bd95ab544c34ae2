"""
Primary decomposition of ideals that become zero-dimensional over K = k(parameters).

Splitting works one eliminant at a time. For each remaining variable x the
generator of (Q ⊗ K) ∩ K[x] is factored over K; distinct irreducible factors
pᵢ^{sᵢ} are pairwise comaximal, so Q = ∩ (Q + pᵢ^{sᵢ}) and each branch is
contracted and split again. Branches whose eliminants are all prime powers are
then split along the minimal polynomials of linear forms ℓ. A branch is accepted
once P = Q + (p_ℓ(ℓ)) + Σ (p_j(x_j)) satisfies dim_K K[x]/P = deg p_ℓ: then
K[x]/P is the field K[ℓ]/(p_ℓ), P is maximal and √Q = P.
"""

import logging
from itertools import product
from typing import List, NamedTuple, Optional, Sequence, Tuple

from src.groebner import buchberger
from src.idealops import Ideal, contract
from src.polyalg.monomials import Monomial, block
from src.polyalg.polynomial import PolyRing, Polynomial
from src.primdec.factorization import factor_univariate
from src.primdec.fraction_field import primitive_part
from src.utils.config import ResourceLimits, default_limits
from src.utils.errors import (
    NoSplittingElement,
    NotProper,
    NotZeroDimensional,
    ResourceLimitExceeded,
)

logger = logging.getLogger(__name__)


class ZeroDimComponent(NamedTuple):
    """A primary component (contracted to S) and its maximal-ideal witness."""

    ideal: Ideal
    witness: Ideal


def _heavy_variables(ring: PolyRing, parameters: Sequence[str]) -> List[str]:
    params = set(parameters)
    for name in params:
        ring.index(name)
    return [v for v in ring.variables if v not in params]


def univariate_eliminant(
    generators: Sequence[Polynomial],
    ring: PolyRing,
    variable: str,
    parameters: Sequence[str],
    limits: Optional[ResourceLimits] = None,
) -> Polynomial:
    """
    Primitive generator of (I ⊗ K) ∩ K[variable] as an element of k[parameters][variable].

    A Gröbner basis under the block order (other variables, variable, parameters)
    restricts to one of I ∩ k[variable, parameters]; its element of least positive
    degree in the variable generates the extension over K.

    Raises:
        NotZeroDimensional: No element involves only the variable and the parameters
        NotProper: I ⊗ K is the unit ideal
    """
    v = ring.index(variable)
    params = sorted(ring.index(name) for name in parameters)
    others = [i for i in range(ring.nvars) if i != v and i not in params]
    order = block(others, [v], params)
    basis = buchberger(generators, order, ring=ring, limits=limits)
    allowed = set(params) | {v}
    candidates = [g for g in basis if set(g.support_indices()) <= allowed]
    if any(g.degree_in(v) <= 0 for g in candidates):
        raise NotProper("the ideal becomes the unit ideal over the parameter field", stage="primdec")
    if not candidates:
        raise NotZeroDimensional(
            f"no eliminant in {variable}: the ideal is not zero-dimensional over k({', '.join(parameters)})",
            stage="primdec",
        )
    best = min(candidates, key=lambda g: (g.degree_in(v), order.key(g.leading_monomial(order))))
    return primitive_part(best, variable)


def quotient_dimension(I: Ideal, parameters: Sequence[str], limits: Optional[ResourceLimits] = None) -> int:
    """
    dim_K K[x]/(I ⊗ K) for an ideal that is zero-dimensional over K.

    A Gröbner basis under the block order (heavy variables, parameters) is a
    Gröbner basis of I ⊗ K whose leading monomials are the heavy parts; standard
    monomials are counted inside the box cut out by the pure powers.
    """
    limits = default_limits() if limits is None else limits
    ring = I.ring
    heavy = [ring.index(v) for v in _heavy_variables(ring, parameters)]
    params = sorted(ring.index(name) for name in parameters)
    order = block(heavy, params)
    basis = buchberger(I.generators, order, ring=ring, limits=limits)
    leads = []
    for g in basis:
        lead = g.leading_monomial(order)
        leads.append(tuple(lead[i] for i in heavy))
    if any(not any(m) for m in leads):
        return 0
    bounds = []
    for k in range(len(heavy)):
        pure = [m[k] for m in leads if all(e == 0 for j, e in enumerate(m) if j != k) and m[k] > 0]
        if not pure:
            raise NotZeroDimensional("ideal is not zero-dimensional over the parameter field", stage="primdec")
        bounds.append(min(pure))
    box = 1
    for b in bounds:
        box *= b
    if box > limits.max_basis_size * 1000:
        raise ResourceLimitExceeded(f"standard monomial box of size {box} is too large", stage="primdec")

    def standard(m: Monomial) -> bool:
        return not any(all(a >= b for a, b in zip(m, lead)) for lead in leads)

    return sum(1 for m in product(*(range(b) for b in bounds)) if standard(m))


def linear_forms(ring: PolyRing, heavy: Sequence[str], count: int) -> List[Polynomial]:
    """
    Deterministic forms ℓ_c = Σ c^k·x_k for c = 0, 1, 2, … (0⁰ = 1), distinct over the field.
    """
    field = ring.field
    gens = [ring.gen(v) for v in heavy]
    seen = set()
    forms = []
    c = 0
    ceiling = field.p if field.is_prime_field else None
    while len(forms) < count and (ceiling is None or c < ceiling):
        form = ring.zero()
        for k, x in enumerate(gens):
            form = form + x.scale(c ** k)
        key = str(form)
        if key not in seen:
            seen.add(key)
            forms.append(form)
        c += 1
    return forms


def _contract_branch(Q: Ideal, extra: Polynomial, parameters: Sequence[str], limits) -> Optional[Ideal]:
    """Contraction of Q + (extra) over the parameters, or None when it is the unit ideal over K."""
    branch = Q.with_generators([extra])
    try:
        contracted = contract(branch, parameters, limits) if parameters else branch
    except NotProper:
        return None
    if contracted.is_unit():
        return None
    return contracted


def _form_eliminant(Q: Ideal, form: Polynomial, parameters: Sequence[str], limits) -> Tuple[PolyRing, str, Polynomial]:
    """Minimal polynomial of a form over K modulo Q, in a fresh variable z."""
    ring = Q.ring
    z = ring.fresh_name("z")
    big = ring.extend([z])
    gens = [g.embed(big) for g in Q.generators] + [big.gen(z) - form.embed(big)]
    eliminant = univariate_eliminant(gens, big, z, parameters, limits)
    return big, z, eliminant


def _at_form(f: Polynomial, big: PolyRing, ring: PolyRing, form: Polynomial) -> Polynomial:
    """Substitute z ↦ ℓ, mapping a polynomial of S[z] back to S."""
    images = [ring.gen(v) for v in ring.variables] + [form]
    return f.substitute(images, target=ring)


def _decompose(Q: Ideal, parameters: Sequence[str], limits: ResourceLimits, depth: int) -> List[ZeroDimComponent]:
    ring = Q.ring
    heavy = _heavy_variables(ring, parameters)
    radicals: List[Polynomial] = []
    for x in heavy:
        eliminant = univariate_eliminant(Q.generators, ring, x, parameters, limits)
        factors = factor_univariate(eliminant, x, limits=limits)
        if len(factors) > 1:
            logger.debug(f"{'  ' * depth}split along {x}: {len(factors)} factors")
            return _split(Q, [f ** k for f, k in factors], parameters, limits, depth)
        radicals.append(factors[0][0])

    if len(heavy) == 1:
        return [ZeroDimComponent(Q, Q.with_generators(radicals))]

    for form in linear_forms(ring, heavy, limits.primary_test_forms):
        big, z, eliminant = _form_eliminant(Q, form, parameters, limits)
        factors = factor_univariate(eliminant, z, limits=limits)
        if len(factors) > 1:
            logger.debug(f"{'  ' * depth}split along {form}: {len(factors)} factors")
            powers = [_at_form(f ** k, big, ring, form) for f, k in factors]
            return _split(Q, powers, parameters, limits, depth)
        minimal = factors[0][0]
        witness = Q.with_generators([_at_form(minimal, big, ring, form)] + radicals)
        if quotient_dimension(witness, parameters, limits) == minimal.degree_in(big.index(z)):
            return [ZeroDimComponent(Q, witness)]
    raise NoSplittingElement(
        f"no linear form certifies a maximal ideal over {Q}", stage="primdec"
    )


def _split(Q: Ideal, powers: Sequence[Polynomial], parameters, limits, depth) -> List[ZeroDimComponent]:
    out: List[ZeroDimComponent] = []
    for power in powers:
        branch = _contract_branch(Q, power, parameters, limits)
        if branch is None:
            continue
        out.extend(_decompose(branch, parameters, limits, depth + 1))
    return out


def primdec_zero_dim(
    I: Ideal, parameters: Sequence[str] = (), limits: Optional[ResourceLimits] = None
) -> List[ZeroDimComponent]:
    """
    Primary decomposition of I ⊗ K for K = k(parameters), contracted back to S.

    Args:
        I: Proper ideal with I ⊗ K zero-dimensional
        parameters: Names of the parameter variables
        limits: Resource ceilings

    Returns:
        Components (Qᵢ, Mᵢ): Qᵢ primary in S with ∩ Qᵢ = contraction of I, and
        Mᵢ ⊗ K = √(Qᵢ ⊗ K) maximal and pairwise distinct

    Raises:
        NotZeroDimensional: Some variable has no eliminant over K
        NoSplittingElement: The linear-form search found no certificate
    """
    limits = default_limits() if limits is None else limits
    parameters = tuple(parameters)
    ring = I.ring
    if I.is_unit():
        raise NotProper("primary decomposition of the unit ideal", stage="primdec")
    heavy = _heavy_variables(ring, parameters)
    start = contract(I, parameters, limits) if parameters else I
    if not heavy:
        return [ZeroDimComponent(start, start)]
    for x in heavy:
        univariate_eliminant(start.generators, ring, x, parameters, limits)
    components = _decompose(start, parameters, limits, 0)
    logger.debug(f"primdec_zero_dim: {len(components)} components over k({', '.join(parameters)})")
    return components
