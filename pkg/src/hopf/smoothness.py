"""
Group dimension, Lie-algebra dimension and the smoothness verdict.

dim Lie(G) is the nullity of the Jacobian ε(∂f_k/∂x_l) of the relations at the
counit; G is smooth exactly when it equals dim G.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional

from src.groebner import buchberger, dimension
from src.hopf.axioms import require_hopf
from src.hopf.quadruple import HopfQuadruple
from src.polyalg.fields import Coefficient
from src.polyalg.monomials import GRADED_LEX
from src.utils.config import ResourceLimits
from src.utils.linalg import nullity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SmoothnessReport:
    group_dim: int
    lie_dim: int
    smooth: bool
    characteristic: int

    def to_dict(self) -> dict:
        return {
            "smooth": self.smooth,
            "group_dim": self.group_dim,
            "lie_dim": self.lie_dim,
            "characteristic": self.characteristic,
        }


def jacobian_at_counit(H: HopfQuadruple) -> List[List[Coefficient]]:
    """Rows ε(∂f_k/∂x_1), …, ε(∂f_k/∂x_n), one per relation f_k."""
    point = H.counit_point()
    return [[f.partial(l).evaluate(point) for l in range(H.nvars)] for f in H.relations]


def lie_dimension(H: HopfQuadruple, limits: Optional[ResourceLimits] = None) -> int:
    """n − rank of the Jacobian at ε."""
    require_hopf(H, limits)
    return nullity(jacobian_at_counit(H), H.nvars, H.field)


def group_dimension(H: HopfQuadruple, limits: Optional[ResourceLimits] = None) -> int:
    """Krull dimension of S/I."""
    require_hopf(H, limits)
    basis = buchberger(H.relations, GRADED_LEX, ring=H.ring.with_order(GRADED_LEX), limits=limits)
    return dimension(basis)


def is_smooth(H: HopfQuadruple, limits: Optional[ResourceLimits] = None) -> SmoothnessReport:
    """
    Smoothness verdict for a valid quadruple.

    Raises:
        InvalidQuadruple: Some Hopf axiom fails
    """
    group_dim = group_dimension(H, limits)
    lie_dim = lie_dimension(H, limits)
    if lie_dim < group_dim:
        logger.warning(f"⚠️ Lie dimension {lie_dim} below group dimension {group_dim} for {H.name or H.ring}")
    report = SmoothnessReport(group_dim, lie_dim, group_dim == lie_dim, H.field.characteristic)
    logger.debug(f"is_smooth: {H.name or H.ring}: {report}")
    return report
