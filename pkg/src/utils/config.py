"""
Resource ceilings read from the environment (and an optional .env file).

Environment variables:
    HOPFSMOOTH_DEGREE_LIMIT     Maximum total degree of any polynomial produced by Buchberger
    HOPFSMOOTH_MAX_BASIS_SIZE   Maximum number of elements of an intermediate basis
    HOPFSMOOTH_MAX_PAIRS        Maximum number of S-pairs processed in one Buchberger run
    HOPFSMOOTH_FORMULA_SIZE     Maximum node count when materialising a formula
    HOPFSMOOTH_LOG_LEVEL        CLI log level (default INFO)
"""

import os
from dataclasses import dataclass, replace
from typing import Optional

from dotenv import load_dotenv

load_dotenv()

DEFAULT_DEGREE_LIMIT = 64
DEFAULT_MAX_BASIS_SIZE = 2000
DEFAULT_MAX_PAIRS = 200000
DEFAULT_FORMULA_SIZE = 2000000
DEFAULT_FACTOR_CANDIDATES = 1 << 16
DEFAULT_PRIMARY_TEST_FORMS = 24


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class ResourceLimits:
    """Ceilings that turn runaway computations into explicit failures."""

    max_degree: int = DEFAULT_DEGREE_LIMIT
    max_basis_size: int = DEFAULT_MAX_BASIS_SIZE
    max_pairs: int = DEFAULT_MAX_PAIRS
    formula_size_ceiling: int = DEFAULT_FORMULA_SIZE
    max_factor_candidates: int = DEFAULT_FACTOR_CANDIDATES
    primary_test_forms: int = DEFAULT_PRIMARY_TEST_FORMS

    @classmethod
    def from_env(cls) -> "ResourceLimits":
        """Build limits from HOPFSMOOTH_* environment variables."""
        return cls(
            max_degree=_env_int("HOPFSMOOTH_DEGREE_LIMIT", DEFAULT_DEGREE_LIMIT),
            max_basis_size=_env_int("HOPFSMOOTH_MAX_BASIS_SIZE", DEFAULT_MAX_BASIS_SIZE),
            max_pairs=_env_int("HOPFSMOOTH_MAX_PAIRS", DEFAULT_MAX_PAIRS),
            formula_size_ceiling=_env_int("HOPFSMOOTH_FORMULA_SIZE", DEFAULT_FORMULA_SIZE),
        )

    def with_degree_limit(self, max_degree: Optional[int]) -> "ResourceLimits":
        """Copy with an overridden degree ceiling (None keeps the current one)."""
        if max_degree is None:
            return self
        return replace(self, max_degree=max_degree)


def default_limits() -> ResourceLimits:
    """Limits derived from the current environment."""
    return ResourceLimits.from_env()


def log_level() -> str:
    return os.getenv("HOPFSMOOTH_LOG_LEVEL", "INFO").upper()
