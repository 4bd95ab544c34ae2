"""
Error types shared by every engine module.

Each error carries a machine-readable code, a human-readable message and the
pipeline stage it was raised in. The CLI maps the three families onto exit codes:
input errors (2), resource limits (3) and engine invariant violations (4).
"""

from typing import Any, Dict, Optional


class HopfSmoothError(Exception):
    """Base class for all engine errors."""

    code = "ENGINE_ERROR"
    exit_code = 4

    def __init__(self, message: str, stage: Optional[str] = None):
        """
        Initialize an engine error.

        Args:
            message: Human-readable error message
            stage: Pipeline stage label (e.g. 'parse', 'buchberger', 'primdec')
        """
        super().__init__(message)
        self.message = message
        self.stage = stage

    def to_dict(self) -> Dict[str, Any]:
        """Structured error object for JSON reports."""
        return {"code": self.code, "message": self.message, "stage": self.stage}

    def __repr__(self):
        return f"{type(self).__name__}(code='{self.code}', message='{self.message}', stage='{self.stage}')"


# Input errors

class InputError(HopfSmoothError):
    code = "INPUT_ERROR"
    exit_code = 2


class PolynomialParseError(InputError):
    """Syntax error in a polynomial or formula string."""

    code = "PARSE_ERROR"

    def __init__(self, message: str, text: str, position: int, stage: Optional[str] = "parse"):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}", stage)


class UnknownVariable(InputError):
    code = "UNKNOWN_VARIABLE"


class BadCoefficient(InputError):
    code = "BAD_COEFFICIENT"


class BadReductionDenominator(InputError):
    """A rational coefficient cannot be reduced modulo p."""

    code = "BAD_REDUCTION_DENOMINATOR"

    def __init__(self, p: int, denominator: int, stage: Optional[str] = "base_change"):
        self.p = p
        self.denominator = denominator
        super().__init__(f"denominator {denominator} is divisible by p={p}", stage)


class RingMismatch(InputError):
    code = "RING_MISMATCH"


class UnboundedTerm(InputError):
    """A term lies beyond the first d monomials."""

    code = "UNBOUNDED_TERM"

    def __init__(self, monomial: Any, rank: int, d: int, stage: Optional[str] = "bounded"):
        self.monomial = monomial
        self.rank = rank
        self.d = d
        super().__init__(f"monomial {monomial} has rank {rank} > d={d}", stage)


class InvalidParameter(InputError):
    code = "INVALID_PARAMETER"


class BasisNotVerified(InputError):
    code = "BASIS_NOT_VERIFIED"


class NotProper(InputError):
    code = "NOT_PROPER"


class NotZeroDimensional(InputError):
    code = "NOT_ZERO_DIMENSIONAL"


class InvalidQuadruple(InputError):
    """A Hopf quadruple failed the axiom check; `report` lists the failures."""

    code = "INVALID_QUADRUPLE"

    def __init__(self, message: str, report: Any = None, stage: Optional[str] = "hopf"):
        self.report = report
        super().__init__(message, stage)

    def to_dict(self) -> Dict[str, Any]:
        payload = super().to_dict()
        if self.report is not None:
            payload["failures"] = [failure.to_dict() for failure in self.report.errors]
        return payload


class CentraliserNotSubgroup(InvalidQuadruple):
    code = "CENTRALISER_NOT_SUBGROUP"


class PointOffChart(InputError):
    code = "POINT_OFF_CHART"


class ActionOffChart(InputError):
    """The action images do not satisfy the chart relations."""

    code = "ACTION_OFF_CHART"


class LocalizerVanishesAtIdentity(InputError):
    code = "LOCALIZER_VANISHES_AT_IDENTITY"


class IdentityNotOnScheme(InputError):
    code = "IDENTITY_NOT_ON_SCHEME"


class UnsupportedQuantifierShape(InputError):
    code = "UNSUPPORTED_QUANTIFIER_SHAPE"


class MissingAssignment(InputError):
    code = "MISSING_ASSIGNMENT"


# Resource limits

class ResourceLimitExceeded(HopfSmoothError):
    code = "RESOURCE_LIMIT"
    exit_code = 3


class FormulaTooLarge(ResourceLimitExceeded):
    code = "FORMULA_TOO_LARGE"


class FactorizationLimitExceeded(ResourceLimitExceeded):
    code = "FACTORIZATION_LIMIT"


class PrimaryTestUnknown(ResourceLimitExceeded):
    """The primary test ran out of candidate forms before reaching a verdict."""

    code = "PRIMARY_TEST_UNKNOWN"


# Engine invariant violations

class EngineInvariantViolation(HopfSmoothError):
    code = "ENGINE_INVARIANT"
    exit_code = 4


class NoSplittingElement(EngineInvariantViolation):
    code = "NO_SPLITTING_ELEMENT"


class AmbiguousComponent(EngineInvariantViolation):
    code = "AMBIGUOUS_COMPONENT"


class DegreeBoundViolation(EngineInvariantViolation):
    code = "DEGREE_BOUND_VIOLATION"
