"""
Run configuration and results of the command-line front end.
"""
from __future__ import annotations

from enum import StrEnum
from fractions import Fraction
from pathlib import Path

from attrs import define, field

from ....lib.rationals import as_fraction
from ..constructions.data import ConstructionParams, Phi
from ..grid_measures.data import GridSpec
from .formats import ReportFormat


class Command(StrEnum):
    CONSTRUCT = "construct"
    SWEEP = "sweep"
    VERIFY = "verify"
    METRICS = "metrics"
    TAILS = "tails"


def _odd_orders(values) -> tuple[int, ...]:
    orders = tuple(int(value) for value in values)
    for order in orders:
        # Raises InvalidGrid for even or tiny orders.
        GridSpec(order)
    return orders


def _paths(values) -> tuple[Path, ...]:
    return tuple(Path(value) for value in values)


def _optional_fraction(value) -> Fraction | None:
    return None if value is None else as_fraction(value)


@define(frozen=True)
class RunConfig:
    """
    Everything one command needs; unused fields keep their defaults.

    ``n_values`` holds the single grid order for construct/tails and the list
    of orders for sweep. ``inputs`` are measure JSON files for verify (one) and
    metrics (two).
    """

    command: Command = field(converter=Command)
    n_values: tuple[int, ...] = field(factory=tuple, converter=_odd_orders)
    gamma: float = 0.6
    epsilon: float = 1.0
    phi: Phi = field(default=Phi.LOG, converter=Phi)
    seed: int = 0
    trials: int = 1
    max_attempts: int = 1
    cap_epsilon: Fraction = field(default=Fraction(1, 4), converter=as_fraction)
    output: Path = field(default=Path("."), converter=Path)
    output_format: ReportFormat = field(default=ReportFormat.JSON, converter=ReportFormat)
    pair_count: int | None = None
    threshold: float = 0.5
    inputs: tuple[Path, ...] = field(factory=tuple, converter=_paths)
    alpha: float = 0.5
    m_index: int = 2
    width: Fraction | None = field(default=None, converter=_optional_fraction)
    points: int = 17
    walk_steps: int | None = None
    step_size: float = 1.0

    def construction_params(self, seed: int | None = None) -> ConstructionParams:
        """Construction parameters for this run, optionally with another seed."""
        return ConstructionParams(
            gamma=self.gamma,
            epsilon=self.epsilon,
            phi=self.phi,
            seed=self.seed if seed is None else seed,
            max_attempts=self.max_attempts,
            cap_epsilon=self.cap_epsilon,
        )

    @property
    def n(self) -> int:
        """The single grid order of this run."""
        if len(self.n_values) != 1:
            raise ValueError(f"{self.command} needs exactly one grid order, got {len(self.n_values)}")
        return self.n_values[0]

    @property
    def seeds(self) -> list[int]:
        """Seeds ``seed .. seed + trials - 1``."""
        return list(range(self.seed, self.seed + self.trials))


@define(frozen=True)
class RunResult:
    """
    Exit status and the rendered artifacts of a run, keyed by file name.
    """

    status: int
    artifacts: dict[str, str]
    summary: str = ""
