"""
Characteristic sweep: run the smoothness pipeline for one input over many primes.

The input is a group quadruple over ℤ (or ℚ), optionally with an action and
points, or a per-prime template such as the Frobenius twist. Each prime is
isolated: a failure is recorded and the sweep moves on.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from sympy import isprime, nextprime, primerange
from tqdm import tqdm

from src.centraliser import ActionSpec, PointList, base_change_action, centraliser_quadruple, frobenius_twist
from src.hopf import HopfQuadruple, base_change_quadruple, is_hopf, is_smooth
from src.polyalg import FieldSpec
from src.utils.config import ResourceLimits
from src.utils.errors import BadReductionDenominator, HopfSmoothError, InvalidParameter

logger = logging.getLogger(__name__)

RATIONALS = FieldSpec.rationals()


@dataclass
class SweepRecord:
    """
    Outcome at one characteristic (0 stands for ℚ).

    `status` is ok, failed (engine error) or skipped (the input does not reduce mod p).
    """

    p: int
    status: str = "ok"
    is_hopf: Optional[bool] = None
    group_dim: Optional[int] = None
    lie_dim: Optional[int] = None
    smooth: Optional[bool] = None
    error: Optional[dict] = None
    wall_time: Optional[float] = None

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "p": self.p,
            "status": self.status,
            "is_hopf": self.is_hopf,
            "group_dim": self.group_dim,
            "lie_dim": self.lie_dim,
            "smooth": self.smooth,
        }
        if self.error is not None:
            out["error"] = self.error
        if timings:
            out["wall_time"] = None if self.wall_time is None else round(self.wall_time, 6)
        return out


@dataclass
class SweepReport:
    """Per-prime records sorted by p, plus the summary derived from them."""

    subject: str
    records: List[SweepRecord] = field(default_factory=list)
    char0: Optional[SweepRecord] = None

    def __post_init__(self):
        self.records.sort(key=lambda r: r.p)

    @property
    def nonsmooth_primes(self) -> List[int]:
        return [r.p for r in self.records if r.status == "ok" and r.smooth is False]

    @property
    def failed_primes(self) -> List[int]:
        return [r.p for r in self.records if r.status == "failed"]

    @property
    def skipped_primes(self) -> List[int]:
        return [r.p for r in self.records if r.status == "skipped"]

    @property
    def observed_p0(self) -> int:
        """The next prime after the largest nonsmooth one (2 when every prime was smooth)."""
        bad = self.nonsmooth_primes
        return int(nextprime(max(bad))) if bad else 2

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "subject": self.subject,
            "primes": [r.p for r in self.records],
            "nonsmooth": self.nonsmooth_primes,
            "failed": self.failed_primes,
            "skipped": self.skipped_primes,
            "p0": {"value": self.observed_p0, "kind": "observed"},
        }
        if self.char0 is not None:
            out["char0"] = self.char0.to_dict(timings)
        out["records"] = [r.to_dict(timings) for r in self.records]
        return out


def parse_primes(text: str) -> List[int]:
    """
    Parse a prime list: '2..97' (every prime in the range) or '2,3,5'.

    Raises:
        InvalidParameter: Malformed text, or a listed number is not prime
    """
    label = text.strip()
    try:
        if ".." in label:
            lo, hi = (int(part) for part in label.split("..", 1))
            primes = [int(p) for p in primerange(lo, hi + 1)]
        else:
            primes = [int(part) for part in label.split(",") if part.strip()]
    except ValueError:
        raise InvalidParameter(f"bad prime list {text!r} (expected a..b or p1,p2,...)", stage="sweep")
    not_prime = [p for p in primes if not isprime(p)]
    if not_prime:
        raise InvalidParameter(f"not prime: {', '.join(map(str, not_prime))}", stage="sweep")
    if not primes:
        raise InvalidParameter(f"prime list {text!r} is empty", stage="sweep")
    return sorted(set(primes))


Stage = Callable[[FieldSpec], SweepRecord]


def group_stage(H: HopfQuadruple, limits: Optional[ResourceLimits] = None) -> Stage:
    """Base change H, check the axioms, then decide smoothness."""

    def run(target: FieldSpec) -> SweepRecord:
        Hp = base_change_quadruple(H, target)
        record = SweepRecord(target.characteristic, is_hopf=is_hopf(Hp, limits))
        if record.is_hopf:
            report = is_smooth(Hp, limits)
            record.group_dim, record.lie_dim, record.smooth = report.group_dim, report.lie_dim, report.smooth
        return record

    return run


def centraliser_stage(
    A: ActionSpec, N: PointList, limits: Optional[ResourceLimits] = None, identity_components: bool = True
) -> Stage:
    """Base change the action and run the centraliser pipeline."""

    def run(target: FieldSpec) -> SweepRecord:
        result = centraliser_quadruple(base_change_action(A, target), N, limits, identity_components)
        report = result.smoothness
        return SweepRecord(target.characteristic, "ok", True, report.group_dim, report.lie_dim, report.smooth)

    return run


def frobenius_stage(N: PointList, limits: Optional[ResourceLimits] = None, identity_components: bool = True) -> Stage:
    """The Frobenius twist instantiated afresh at every prime."""

    def run(target: FieldSpec) -> SweepRecord:
        if not target.is_prime_field:
            raise InvalidParameter("the Frobenius twist has no characteristic-0 instance", stage="sweep")
        result = centraliser_quadruple(frobenius_twist(target.p), N, limits, identity_components)
        report = result.smoothness
        return SweepRecord(target.p, "ok", True, report.group_dim, report.lie_dim, report.smooth)

    return run


def _run_isolated(stage: Stage, target: FieldSpec) -> SweepRecord:
    p = target.characteristic
    started = time.perf_counter()
    try:
        record = stage(target)
    except BadReductionDenominator as e:
        logger.warning(f"⚠️ p={p}: {e.message}")
        record = SweepRecord(p, "skipped", error=e.to_dict())
    except HopfSmoothError as e:
        logger.warning(f"⚠️ p={p}: {e.code}: {e.message}")
        record = SweepRecord(p, "failed", error=e.to_dict())
    except Exception as e:
        logger.error(f"❌ p={p}: unexpected {type(e).__name__}: {e}")
        record = SweepRecord(p, "failed", error={"code": HopfSmoothError.code, "message": str(e), "stage": "sweep"})
    record.wall_time = time.perf_counter() - started
    return record


def sweep(stage: Stage, primes: Sequence[int], subject: str, char0: bool = False, progress: bool = True) -> SweepReport:
    """
    Run a stage at every prime (and over ℚ with char0), isolating failures.

    Args:
        stage: Per-field pipeline (see group_stage, centraliser_stage, frobenius_stage)
        primes: Characteristics to visit
        subject: Label for the report
        char0: Also run the ℚ instance
        progress: Show a progress bar on stderr

    Returns:
        The sweep report, records sorted by p
    """
    records: Dict[int, SweepRecord] = {}
    for p in tqdm(sorted(set(primes)), desc="Sweeping", unit="primes", disable=not progress):
        records[p] = _run_isolated(stage, FieldSpec.prime(p))
    zero = _run_isolated(stage, RATIONALS) if char0 else None
    report = SweepReport(subject, list(records.values()), zero)
    logger.info(f"🔎 {subject}: nonsmooth at {report.nonsmooth_primes or 'no listed prime'}, observed p0 = {report.observed_p0}")
    return report
