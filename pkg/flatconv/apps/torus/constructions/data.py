"""
Value types for the randomized construction.
"""
from __future__ import annotations

import math
from enum import StrEnum
from fractions import Fraction

from attrs import define, field

from ....lib.rationals import as_fraction
from ....lib.seeding import MASK64
from .exceptions import InvalidParameters


class Phi(StrEnum):
    """
    Named divergent sequences usable as the slack factor phi(n).
    """

    LOG = "log"
    LOGLOG = "loglog"
    SQRTLOG = "sqrtlog"

    def value_at(self, n: int) -> float:
        """Value of the sequence at ``n``."""
        if self is Phi.LOG:
            return math.log(n)
        if self is Phi.LOGLOG:
            return math.log(math.log(n))
        return math.sqrt(math.log(n))


def _to_fraction(value) -> Fraction:
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise InvalidParameters(f"not a number: {value!r}") from err


@define(frozen=True)
class ConstructionParams:
    """
    Parameters of one construction run.

    ``N = floor(n ** gamma)`` points are drawn per attempt. ``epsilon`` and
    ``phi`` set the flatness bound; ``cap_epsilon`` is the failure probability
    the multiplicity cap M is sized for (1/4 in the classical argument).
    """

    gamma: float
    epsilon: float
    phi: Phi = field(default=Phi.LOG, converter=Phi)
    seed: int = 0
    max_attempts: int = 1
    cap_epsilon: Fraction = field(default=Fraction(1, 4), converter=_to_fraction)

    def __attrs_post_init__(self) -> None:
        if not 0 < self.gamma < 1:
            raise InvalidParameters(f"gamma must lie in (0, 1), got {self.gamma}")
        if not self.epsilon > 0:
            raise InvalidParameters(f"epsilon must be positive, got {self.epsilon}")
        if not 0 <= self.seed <= MASK64:
            raise InvalidParameters(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.max_attempts < 1:
            raise InvalidParameters(f"max_attempts must be at least 1, got {self.max_attempts}")
        if not 0 < self.cap_epsilon < 1:
            raise InvalidParameters(f"cap_epsilon must lie in (0, 1), got {self.cap_epsilon}")


@define(frozen=True)
class TrialReport:
    """
    The outcome of one attempt of the construction.

    ``max_deviation`` is max |sigma*sigma(k/n) - 1/n| over the non-zero grid
    points; ``origin_deviation`` is the same quantity at k = 0, reported for
    reference only. ``flat_ok`` holds iff max_deviation <= flatness_bound and
    ``mult_ok`` iff multiplicity_max < multiplicity_cap.
    """

    n: int
    pair_count: int
    multiplicity_cap: int
    max_deviation: Fraction
    flatness_bound: float
    multiplicity_max: int
    flat_ok: bool
    mult_ok: bool
    attempts_used: int
    seed: int
    attempt: int = 0
    trial_seed: int = 0
    origin_deviation: Fraction = Fraction(0)

    @property
    def passed(self) -> bool:
        """True when both checks passed."""
        return self.flat_ok and self.mult_ok

    @property
    def deviation_ratio(self) -> float:
        """
        How far the deviation is into the bound (<= 1 means flat).
        """
        return float(self.max_deviation) / self.flatness_bound


@define(frozen=True)
class SuccessSummary:
    """
    Single-trial success statistics for one grid order over many seeds.
    """

    n: int
    pair_count: int
    trials: int
    success_rate: float
    flat_rate: float
    mult_rate: float
    median_deviation: float
    median_ratio: float
    reports: tuple[TrialReport, ...]


@define(frozen=True)
class ScalingSummary:
    """
    Median deviation against the reference shape sqrt(ln n) / (2 N sqrt(n)).

    ``slope`` is the fitted log-log slope of the medians against n and
    ``predicted_slope`` the slope of the reference over the same n values.
    """

    n_values: tuple[int, ...]
    pair_counts: tuple[int, ...]
    medians: tuple[float, ...]
    references: tuple[float, ...]
    slope: float
    predicted_slope: float

    @property
    def ratios(self) -> tuple[float, ...]:
        """Each median deviation divided by its predicted scale."""
        return tuple(median / reference for median, reference in zip(self.medians, self.references))

