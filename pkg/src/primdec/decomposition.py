"""
Primary decomposition in any dimension.

For a maximal independent set u the contraction I^c = (I : f^∞) = (I : f^s)
is decomposed over k(u), and I = I^c ∩ (I + (f^s)) hands the second ideal to the
next round (Noetherian induction). Components sharing an associated prime are
merged, redundant ones dropped, and the result is sorted by reduced-basis
fingerprint.
"""

import logging
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence

from src.groebner import max_independent_set
from src.idealops import Ideal, contract, contraction_data, intersect_all
from src.primdec.zero_dim import ZeroDimComponent, primdec_zero_dim
from src.utils.config import ResourceLimits, default_limits
from src.utils.errors import InvalidParameter, NoSplittingElement, NotProper, PrimaryTestUnknown

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimaryComponent:
    """
    A primary ideal of a decomposition.

    Attributes:
        ideal: The primary ideal Q
        witness: Ideal M whose extension over the parameter field is √(Q ⊗ K), maximal
        associated_prime: √Q, the contraction of the witness
        isolated: False when √Q properly contains the prime of another component
    """

    ideal: Ideal
    witness: Optional[Ideal]
    associated_prime: Ideal
    isolated: bool = True

    @property
    def witness_maximal_ideal(self) -> Optional[Ideal]:
        return self.witness

    def fingerprint(self) -> str:
        return self.ideal.fingerprint()

    def to_dict(self) -> dict:
        return {
            "ideal": self.ideal.to_strings(),
            "associated_prime": self.associated_prime.to_strings(),
            "isolated": self.isolated,
        }


def _parameters_of(I: Ideal) -> tuple:
    return max_independent_set(I.groebner())


def _components_over(J: Ideal, parameters: Sequence[str], limits) -> List[PrimaryComponent]:
    out = []
    for part in primdec_zero_dim(J, parameters, limits):
        prime = contract(part.witness, parameters, limits) if parameters else part.witness
        out.append(PrimaryComponent(part.ideal, part.witness, prime))
    return out


def _raw_components(I: Ideal, limits: ResourceLimits) -> List[PrimaryComponent]:
    ring = I.ring
    pending = [I]
    out: List[PrimaryComponent] = []
    while pending:
        J = pending.pop()
        if J.is_unit():
            continue
        u = _parameters_of(J)
        if len(u) == ring.nvars:
            out.append(PrimaryComponent(J, J, J))
            continue
        data = contraction_data(J, u, limits)
        found = _components_over(data.ideal, u, limits)
        logger.debug(f"primdec: {len(found)} components over k({', '.join(u)}), exponent {data.exponent}")
        out.extend(found)
        if data.exponent > 0:
            rest = J.with_generators([data.multiplier ** data.exponent])
            if not rest.is_unit():
                pending.append(rest)
    return out


def _merge_by_prime(components: List[PrimaryComponent], limits) -> List[PrimaryComponent]:
    groups: dict = {}
    for component in components:
        groups.setdefault(component.associated_prime.fingerprint(), []).append(component)
    merged = []
    for group in groups.values():
        if len(group) == 1:
            merged.append(group[0])
            continue
        ideal = intersect_all([c.ideal for c in group], limits)
        merged.append(replace(group[0], ideal=ideal))
    return merged


def _irredundant(components: List[PrimaryComponent], limits) -> List[PrimaryComponent]:
    kept = list(components)
    index = 0
    while index < len(kept) and len(kept) > 1:
        others = kept[:index] + kept[index + 1:]
        rest = intersect_all([c.ideal for c in others], limits)
        if kept[index].ideal.contains_ideal(rest):
            kept = others
        else:
            index += 1
    return kept


def classify_isolated(components: Sequence[PrimaryComponent]) -> List[PrimaryComponent]:
    """
    Flag embedded components: √Qᵢ is embedded when it properly contains some √Qⱼ.
    """
    out = []
    for i, component in enumerate(components):
        prime = component.associated_prime
        embedded = False
        for j, other in enumerate(components):
            if i == j:
                continue
            if prime.contains_ideal(other.associated_prime) and not other.associated_prime.contains_ideal(prime):
                embedded = True
                break
        out.append(replace(component, isolated=not embedded))
    return out


def primdec(I: Ideal, limits: Optional[ResourceLimits] = None) -> List[PrimaryComponent]:
    """
    Irredundant primary decomposition of a proper ideal over ℚ or 𝔽_p.

    Args:
        I: Proper ideal
        limits: Resource ceilings

    Returns:
        Components sorted by fingerprint, with isolated/embedded flags set;
        their intersection equals I

    Raises:
        NotProper: I is the unit ideal
    """
    limits = default_limits() if limits is None else limits
    if I.is_unit():
        raise NotProper("primary decomposition of the unit ideal", stage="primdec")
    raw = _raw_components(I, limits)
    merged = _merge_by_prime(raw, limits)
    irredundant = _irredundant(sorted(merged, key=lambda c: c.fingerprint()), limits)
    components = classify_isolated(sorted(irredundant, key=lambda c: c.fingerprint()))
    logger.debug(f"primdec: {len(raw)} raw components, {len(components)} after merging and pruning")
    return components


def _zero_dim_parts(Q: Ideal, limits: ResourceLimits) -> Optional[List[ZeroDimComponent]]:
    """Decomposition of Q over its independent set, or None if Q is not its own contraction."""
    u = _parameters_of(Q)
    if len(u) == Q.ring.nvars:
        return [ZeroDimComponent(Q, Q)]
    data = contraction_data(Q, u, limits)
    if data.exponent > 0 and not Q.contains_ideal(data.ideal):
        return None
    try:
        return primdec_zero_dim(data.ideal, u, limits)
    except NoSplittingElement as e:
        raise PrimaryTestUnknown(f"primary test inconclusive: {e.message}", stage="is_primary")


def is_primary(Q: Ideal, limits: Optional[ResourceLimits] = None) -> bool:
    """
    Decide whether Q is primary.

    Q is primary exactly when it equals its contraction over a maximal
    independent set u and Q ⊗ k(u) has a single primary component.

    Raises:
        NotProper: Q is the unit ideal
        PrimaryTestUnknown: No linear form certified the zero-dimensional part
    """
    limits = default_limits() if limits is None else limits
    if Q.is_unit():
        raise NotProper("the unit ideal is not primary", stage="is_primary")
    parts = _zero_dim_parts(Q, limits)
    return parts is not None and len(parts) == 1


def associated_prime(Q: Ideal, limits: Optional[ResourceLimits] = None) -> Ideal:
    """
    √Q for a primary ideal Q.

    Raises:
        InvalidParameter: Q is not primary
    """
    limits = default_limits() if limits is None else limits
    parts = _zero_dim_parts(Q, limits)
    if parts is None or len(parts) != 1:
        raise InvalidParameter(f"{Q} is not primary", stage="is_primary")
    u = _parameters_of(Q)
    witness = parts[0].witness
    return contract(witness, u, limits) if u and len(u) < Q.ring.nvars else witness


def component_of(Q: Ideal, limits: Optional[ResourceLimits] = None) -> PrimaryComponent:
    """Wrap a primary ideal as a component (witness and prime computed)."""
    limits = default_limits() if limits is None else limits
    prime = associated_prime(Q, limits)
    return PrimaryComponent(Q, None, prime)


def verify_decomposition(I: Ideal, components: Sequence[PrimaryComponent], limits: Optional[ResourceLimits] = None) -> bool:
    """True when the components intersect exactly to I."""
    if not components:
        return I.is_unit()
    meet = intersect_all([c.ideal for c in components], limits)
    return meet.equals(I)

