"""
Group actions on a single affine chart, and the points they are centralised at.

The action of G = Spec S/I on a chart X = Spec k[t₁,…,t_r]/I₁ is given by the
images ᾱ(t_l), polynomials in the group variables x and the chart variables t.
An optional localizer f restricts the chart to the principal open D(f).
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.groebner import member
from src.hopf.catalog import catalog_quadruple
from src.hopf.io import load_quadruple
from src.hopf.quadruple import HopfQuadruple, base_change_quadruple
from src.idealops import Ideal
from src.polyalg.bounded import monomial_rank
from src.polyalg.fields import Coefficient, FieldSpec
from src.polyalg.polynomial import PolyRing, Polynomial, base_change
from src.utils.config import ResourceLimits
from src.utils.errors import ActionOffChart, InvalidParameter, LocalizerVanishesAtIdentity, PointOffChart, RingMismatch

logger = logging.getLogger(__name__)


@dataclass
class ActionSpec:
    """
    An action map G × X → X on one chart.

    Attributes:
        group: The acting group quadruple, in variables x₁,…,xₙ
        chart_variables: Names t₁,…,t_r of the chart coordinates
        chart_relations: Generators of I₁, polynomials in the chart variables
        action: t_l ↦ ᾱ(t_l), polynomials in the combined ring k[x, t]
        localizer: Optional f in k[x, t] defining the principal open D(f)
        name: Optional label used in reports
    """

    group: HopfQuadruple
    chart_variables: Tuple[str, ...]
    chart_relations: List[Polynomial]
    action: Dict[str, Polynomial]
    localizer: Optional[Polynomial] = None
    name: Optional[str] = None

    def __post_init__(self):
        self.chart_variables = tuple(self.chart_variables)
        if set(self.action) != set(self.chart_variables):
            raise InvalidParameter(
                f"the action must define exactly the chart variables {list(self.chart_variables)}", stage="action"
            )
        chart = self.chart_ring
        combined = self.combined_ring
        for f in self.chart_relations:
            self._expect(f, chart, "chart relation")
        for f in self.action.values():
            self._expect(f, combined, "action polynomial")
        if self.localizer is not None:
            self._expect(self.localizer, combined, "localizer")

    @staticmethod
    def _expect(f: Polynomial, ring: PolyRing, label: str):
        if f.ring.variables != ring.variables or f.ring.field != ring.field:
            raise RingMismatch(f"{label} {f} does not live in {ring}", stage="action")

    @property
    def field(self) -> FieldSpec:
        return self.group.field

    @property
    def chart_ring(self) -> PolyRing:
        return PolyRing(self.field, self.chart_variables)

    @property
    def combined_ring(self) -> PolyRing:
        """k[x₁,…,xₙ, t₁,…,t_r]; clashing names raise RingMismatch."""
        return self.group.ring.extend(self.chart_variables)

    def action_images(self) -> List[Polynomial]:
        return [self.action[t] for t in self.chart_variables]

    def d_bound(self) -> int:
        """
        Least d such that every ᾱ(t_l) is d-bounded in the group variables.

        The chart variables count as constants: each term is measured by its
        exponents in x alone.
        """
        n = self.group.nvars
        ranks = [monomial_rank(m[:n]) for f in self.action_images() for m in f.terms]
        return max(ranks, default=1)

    def instantiate(self, f: Polynomial, point: Sequence[Coefficient]) -> Polynomial:
        """Substitute the chart coordinates of a point into f ∈ k[x, t], giving an element of S."""
        ring = self.group.ring
        images = ring.gens() + [ring.constant(c) for c in point]
        return f.substitute(images, target=ring)

    def respects_chart(self, limits: Optional[ResourceLimits] = None) -> bool:
        """True when h(ᾱ(t)) lies in (𝓑, I₁) ⊂ k[x, t] for every chart relation h."""
        if not self.chart_relations:
            return True
        combined = self.combined_ring
        ideal = Ideal(
            combined,
            [g.embed(combined) for g in self.group.relations] + [h.embed(combined) for h in self.chart_relations],
        )
        basis = ideal.groebner(limits)
        images = self.action_images()
        return all(member(h.substitute(images, target=combined), basis) for h in self.chart_relations)

    def require_chart(self, limits: Optional[ResourceLimits] = None):
        """
        Raises:
            ActionOffChart: Some chart relation h has h(ᾱ(t)) outside (𝓑, I₁)
        """
        if not self.respects_chart(limits):
            relations = ", ".join(str(h) for h in self.chart_relations)
            raise ActionOffChart(f"{self.name or 'action'} does not preserve the chart relations {relations}", stage="centralise")

    def check_point(self, point: Sequence[Coefficient]):
        """
        Raises:
            PointOffChart: The point has the wrong length or violates a chart relation
            LocalizerVanishesAtIdentity: f(ε, v) = 0, so (identity, v) lies outside D(f)
        """
        if len(point) != len(self.chart_variables):
            raise PointOffChart(
                f"point {list(point)} has {len(point)} coordinates, chart has {len(self.chart_variables)}",
                stage="centralise",
            )
        for f in self.chart_relations:
            if f.evaluate(point) != 0:
                raise PointOffChart(f"chart relation {f} does not vanish at {list(point)}", stage="centralise")
        if self.localizer is not None:
            value = self.localizer.evaluate(list(self.group.counit_point()) + list(point))
            if value == 0:
                raise LocalizerVanishesAtIdentity(
                    f"localizer {self.localizer} vanishes at (ε, {list(point)})", stage="centralise"
                )


@dataclass
class PointList:
    """Points of the chart, kept as literal strings until a field is chosen."""

    points: List[Tuple[str, ...]]
    labels: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.points = [tuple(str(c) for c in point) for point in self.points]
        if not self.labels:
            self.labels = [f"v{k + 1}" for k in range(len(self.points))]
        if len(self.labels) != len(self.points):
            raise InvalidParameter(f"{len(self.labels)} labels for {len(self.points)} points", stage="action")

    def __len__(self):
        return len(self.points)

    def coordinates(self, field_spec: FieldSpec) -> List[List[Coefficient]]:
        return [[field_spec.parse_literal(c) for c in point] for point in self.points]

    def validated(self, A: ActionSpec) -> List[List[Coefficient]]:
        """Coordinates over the action's field, each checked against the chart and localizer."""
        coords = self.coordinates(A.field)
        for point in coords:
            A.check_point(point)
        return coords

    def with_point(self, point: Sequence[str], label: Optional[str] = None) -> "PointList":
        return PointList(self.points + [tuple(point)], self.labels + [label or f"v{len(self.points) + 1}"])


def _change(f: Polynomial, target: FieldSpec) -> Polynomial:
    if target.is_prime_field:
        return base_change(f, target.p)
    return f.change_field(target)


def base_change_action(A: ActionSpec, target: Union[int, FieldSpec]) -> ActionSpec:
    """Coefficient-wise reduction of the group, chart and action to 𝔽_p (or ℤ → ℚ)."""
    fld = FieldSpec.prime(target) if isinstance(target, int) else target
    group = base_change_quadruple(A.group, fld)
    return ActionSpec(
        group,
        A.chart_variables,
        [_change(f, fld) for f in A.chart_relations],
        {t: _change(f, fld) for t, f in A.action.items()},
        None if A.localizer is None else _change(A.localizer, fld),
        A.name,
    )


def action_from_strings(
    group: HopfQuadruple,
    chart_variables: Sequence[str],
    chart_relations: Sequence[str],
    action: Dict[str, str],
    localizer: Optional[str] = None,
    name: Optional[str] = None,
) -> ActionSpec:
    chart = PolyRing(group.field, tuple(chart_variables))
    combined = group.ring.extend(chart_variables)
    return ActionSpec(
        group,
        tuple(chart_variables),
        [chart.parse(text) for text in chart_relations],
        {t: combined.parse(action[t]) for t in action},
        None if localizer in (None, "", "1") else combined.parse(localizer),
        name,
    )


def _resolve_group(reference: str, base: Path) -> HopfQuadruple:
    """A group is a catalog name or a quadruple file path relative to the action file."""
    candidate = (base / reference) if not Path(reference).is_absolute() else Path(reference)
    if candidate.suffix == ".json":
        if not candidate.exists():
            raise InvalidParameter(f"group file {candidate} not found", stage="load")
        return load_quadruple(candidate)
    return catalog_quadruple(reference)


def action_from_dict(data: Dict[str, Any], base: Union[str, Path] = ".", name: Optional[str] = None) -> Tuple[ActionSpec, PointList]:
    """
    Build an action and its points from the JSON layout:

        {
          "group": "gl2",
          "chart": {"vars": ["t1", "t2"], "relations": []},
          "action": {"t1": "a*t1 + b*t2", "t2": "c*t1 + d*t2"},
          "localizer": null,
          "points": [["1", "0"]]
        }
    """
    missing = [key for key in ("group", "chart", "action", "points") if key not in data]
    if missing:
        raise InvalidParameter(f"action file is missing {', '.join(missing)}", stage="load")
    chart = data["chart"]
    if "vars" not in chart:
        raise InvalidParameter("action file chart has no vars", stage="load")
    group = _resolve_group(str(data["group"]), Path(base))
    A = action_from_strings(
        group,
        chart["vars"],
        chart.get("relations", []),
        data["action"],
        data.get("localizer"),
        name=name,
    )
    N = PointList([tuple(point) for point in data["points"]], list(data.get("labels", [])))
    return A, N


def load_action(path: Union[str, Path]) -> Tuple[ActionSpec, PointList]:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise InvalidParameter(f"{path} is not valid JSON: {e}", stage="load")
    A, N = action_from_dict(data, base=path.parent, name=path.stem)
    logger.debug(f"load_action: {path.name}: {len(A.chart_variables)} chart variables, {len(N)} points")
    return A, N
