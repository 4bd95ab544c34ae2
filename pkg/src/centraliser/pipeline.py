"""
Centraliser subgroup schemes C_G(N) of a finite set of chart points.

Per point v the pipeline is

    centraliser_ideal   (𝓑, ᾱ(t_l)(v) − v_l, u·f̄ − 1)   in k[x, u]
    closure_ideal       eliminate u                     in k[x]
    identity_component  the isolated primary component through ε

and the centraliser is cut out by the sum of the per-point ideals.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from tqdm import tqdm

from src.centraliser.action import ActionSpec, PointList
from src.groebner import GroebnerBasis, eliminate, member
from src.hopf.axioms import check_hopf, require_hopf
from src.hopf.quadruple import HopfQuadruple
from src.hopf.smoothness import SmoothnessReport, is_smooth
from src.idealops import Ideal
from src.polyalg.bounded import bound_of_all
from src.polyalg.fields import Coefficient
from src.polyalg.polynomial import PolyRing
from src.primdec import primdec
from src.utils.config import ResourceLimits, default_limits
from src.utils.errors import (
    AmbiguousComponent,
    CentraliserNotSubgroup,
    IdentityNotOnScheme,
    InvalidParameter,
    NotProper,
)

logger = logging.getLogger(__name__)

LOCALIZER_VARIABLE = "u"


def centraliser_ideal(A: ActionSpec, v: Sequence[Coefficient]) -> Ideal:
    """
    The ideal of the points of G fixing v, inside D(f).

    Args:
        A: Action on one chart
        v: Chart point (coordinates over the action's field)

    Returns:
        Ideal of k[x₁,…,xₙ] without a localizer, of k[x₁,…,xₙ, u] with one

    Raises:
        PointOffChart: v violates a chart relation
        LocalizerVanishesAtIdentity: f(ε, v) = 0
    """
    A.check_point(v)
    group_ring = A.group.ring
    fixed = [A.instantiate(image, v) - group_ring.constant(c) for image, c in zip(A.action_images(), v)]
    generators = list(A.group.relations) + fixed
    if A.localizer is None:
        return Ideal(group_ring, generators)
    ring = group_ring.extend([group_ring.fresh_name(LOCALIZER_VARIABLE)])
    u = ring.gen(ring.variables[-1])
    localized = u * A.instantiate(A.localizer, v).embed(ring) - ring.one()
    return Ideal(ring, [g.embed(ring) for g in generators] + [localized])


def closure_ideal(I: Ideal, group_ring: PolyRing, limits: Optional[ResourceLimits] = None) -> Ideal:
    """
    I ∩ k[x₁,…,xₙ]: the Zariski closure in G of the locally closed fixed locus.

    An ideal already living in the group ring is returned unchanged.
    """
    if I.ring.variables == group_ring.variables:
        return I
    basis = eliminate(I.generators, group_ring.variables, ring=I.ring, limits=limits)
    generators = [g.embed(group_ring) for g in basis.nonzero()]
    logger.debug(f"closure_ideal: {len(I.generators)} generators -> {len(generators)} after elimination")
    return Ideal(group_ring, generators)


def _vanishes_at(ideal: Ideal, point: Sequence[Coefficient]) -> bool:
    return all(g.evaluate(point) == 0 for g in ideal.generators)


def identity_component(J: Ideal, counit: Sequence[Coefficient], limits: Optional[ResourceLimits] = None) -> Ideal:
    """
    The ideal of the connected component of V(J) through the identity.

    Raises:
        IdentityNotOnScheme: ε is not a point of V(J)
        AmbiguousComponent: Several isolated components pass through ε
    """
    limits = default_limits() if limits is None else limits
    if not _vanishes_at(J, counit):
        raise IdentityNotOnScheme(f"the identity is not a point of V({', '.join(map(str, J.generators))})", stage="component")
    if J.is_zero():
        return J
    try:
        components = primdec(J, limits)
    except NotProper:
        raise IdentityNotOnScheme("the fixed locus is empty", stage="component")
    through = [c for c in components if c.isolated and _vanishes_at(c.associated_prime, counit)]
    if not through:
        raise IdentityNotOnScheme("no isolated component passes through the identity", stage="component")
    if len(through) > 1:
        raise AmbiguousComponent(
            f"{len(through)} isolated components pass through the identity: "
            + "; ".join(", ".join(c.ideal.to_strings()) for c in through),
            stage="component",
        )
    logger.debug(f"identity_component: picked 1 of {len(components)} components")
    return through[0].ideal


@dataclass
class PointStage:
    """Per-point record of the three pipeline stages."""

    label: str
    point: List[Coefficient]
    centraliser: Ideal
    closure: Ideal
    component: Ideal

    def to_dict(self, field_format) -> dict:
        return {
            "label": self.label,
            "point": [field_format(c) for c in self.point],
            "closure": self.closure.to_strings(),
            "component": self.component.to_strings(),
        }


@dataclass
class CentraliserResult:
    """
    The centraliser quadruple with its verdicts.

    Attributes:
        quadruple: (𝓑′, Δ, σ, ε) reusing the group's structure maps
        basis: Reduced Gröbner basis 𝓑′ of Σ J_v
        smoothness: is_smooth verdict for the quadruple
        bound: Realized bound e, the largest monomial rank over 𝓑′
        stages: Per-point pipeline records
        identity_components: False when the component step was skipped
    """

    quadruple: HopfQuadruple
    basis: GroebnerBasis
    smoothness: SmoothnessReport
    bound: int
    stages: List[PointStage] = field(default_factory=list)
    identity_components: bool = True

    def to_dict(self) -> Dict:
        fmt = self.quadruple.field.format
        return {
            "field": str(self.quadruple.field),
            "relations": [str(g) for g in self.basis.nonzero()],
            "bound": self.bound,
            "identity_components": self.identity_components,
            **self.smoothness.to_dict(),
            "points": [stage.to_dict(fmt) for stage in self.stages],
        }


def point_ideal(
    A: ActionSpec,
    v: Sequence[Coefficient],
    label: str = "v",
    identity_components: bool = True,
    limits: Optional[ResourceLimits] = None,
) -> PointStage:
    """J_v: the per-point ideal, taken to its identity component unless skipped."""
    I = centraliser_ideal(A, v)
    J = closure_ideal(I, A.group.ring, limits)
    component = identity_component(J, A.group.counit_point(), limits) if identity_components else J
    return PointStage(label, list(v), I, J, component)


def centraliser_quadruple(
    A: ActionSpec,
    N: PointList,
    limits: Optional[ResourceLimits] = None,
    identity_components: bool = True,
    progress: bool = False,
) -> CentraliserResult:
    """
    Hopf quadruple of the centraliser of N and its smoothness.

    Args:
        A: Action of a group quadruple on one chart, over a field
        N: Nonempty list of chart points
        limits: Resource ceilings
        identity_components: Pass each J_v to its identity component (False keeps the full closure)
        progress: Show a progress bar over the points

    Raises:
        InvalidParameter: N is empty or the action is not over a field
        InvalidQuadruple: The group itself fails an axiom
        ActionOffChart: The action images violate the chart relations
        CentraliserNotSubgroup: The structure maps do not descend to the centraliser
    """
    limits = default_limits() if limits is None else limits
    if len(N) == 0:
        raise InvalidParameter("the centraliser needs at least one point", stage="centralise")
    if not A.field.is_field:
        raise InvalidParameter(f"actions over {A.field} need a base change to a field", stage="centralise")
    require_hopf(A.group, limits)
    A.require_chart(limits)

    coords = N.validated(A)
    stages: List[PointStage] = []
    for label, v in tqdm(list(zip(N.labels, coords)), desc="Centralising", unit="points", disable=not progress):
        stages.append(point_ideal(A, v, label, identity_components, limits))

    group_ring = A.group.ring
    total = Ideal(group_ring, [g for stage in stages for g in stage.component.generators])
    basis = total.groebner(limits)
    relations = basis.nonzero()
    H = A.group.with_relations(relations)
    H.name = f"C({A.group.name or 'G'})"

    report = check_hopf(H, limits)
    H._check = report
    if not report.is_valid:
        raise CentraliserNotSubgroup(
            f"the centraliser ideal is not a subgroup: {', '.join(report.codes())}", report, stage="centralise"
        )
    smoothness = is_smooth(H, limits)
    bound = bound_of_all(relations)
    logger.debug(f"centraliser_quadruple: {len(relations)} relations, bound {bound}, {smoothness}")
    return CentraliserResult(H, basis, smoothness, bound, stages, identity_components)


def contains_group(result: CentraliserResult, group: HopfQuadruple) -> bool:
    """True when every group relation lies in the centraliser ideal."""
    return all(member(g, result.basis) for g in group.relations)
