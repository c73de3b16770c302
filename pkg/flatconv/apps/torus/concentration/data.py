"""
Value types for martingale paths and tail experiments.
"""
from __future__ import annotations

import math
from enum import StrEnum
from fractions import Fraction
from itertools import accumulate
from typing import Any

from attrs import define, field


class Centering(StrEnum):
    """
    How the pair-count increments are centered.

    COMPENSATOR subtracts the conditional mean of the new pairs given the
    history; the sum telescopes to (P(r) - compensator) / 4. DOOB uses
    E[P(r) | X_1..X_j] - E[P(r) | X_1..X_j-1], which telescopes to
    (P(r) - E[P(r)]) / 4.
    """

    COMPENSATOR = "compensator"
    DOOB = "doob"


@define(frozen=True)
class MartingalePath:
    """
    Increments Y_1..Y_N of one sample path.

    ``tripped_at`` is the first step whose history already put M atoms on one
    grid point; Y is 0 from that step on.
    """

    increments: tuple[Fraction, ...] = field(converter=tuple)
    tripped_at: int | None = None

    def __attrs_post_init__(self) -> None:
        if self.tripped_at is not None:
            trailing = self.increments[self.tripped_at - 1:]
            if any(trailing):
                raise ValueError(f"non-zero increment after the cap tripped at step {self.tripped_at}")

    @property
    def cap_tripped(self) -> bool:
        """Whether the multiplicity cap stopped the path."""
        return self.tripped_at is not None

    @property
    def partial_sums(self) -> tuple[Fraction, ...]:
        """
        W_0 = 0, W_1, ..., W_N.
        """
        return tuple(accumulate(self.increments, initial=Fraction(0)))

    @property
    def final(self) -> Fraction:
        """Sum of all increments."""
        return sum(self.increments, Fraction(0))


@define(frozen=True)
class TailExperiment:
    """
    Empirical tail frequencies of a statistic against a theoretical bound.

    ``empirical[i]`` is the fraction of trials where the statistic reached
    ``x_values[i]`` and ``bounds[i]`` the bound at that x.
    """

    variance: float
    trials: int
    seed: int
    x_values: tuple[float, ...] = field(converter=tuple)
    empirical: tuple[float, ...] = field(converter=tuple)
    bounds: tuple[float, ...] = field(converter=tuple)
    parameters: dict[str, Any] = field(factory=dict)

    def __attrs_post_init__(self) -> None:
        if not len(self.x_values) == len(self.empirical) == len(self.bounds):
            raise ValueError("x values, frequencies and bounds must have the same length")
        if any(not 0 <= value <= 1 for value in self.empirical):
            raise ValueError("frequencies must lie in [0, 1]")

    @property
    def stderr(self) -> tuple[float, ...]:
        """
        Standard error of a frequency whose true value sits right at the bound.
        """
        return tuple(math.sqrt(bound * (1 - bound) / self.trials) for bound in self.bounds)

    def rows(self) -> list[tuple[float, float, float, float]]:
        """(x, empirical, bound, stderr) for every grid point."""
        return list(zip(self.x_values, self.empirical, self.bounds, self.stderr))

    def dominated(self, k: float = 3) -> bool:
        """
        Whether every frequency is at most bound + k standard errors.
        """
        return all(freq <= bound + k * err for _, freq, bound, err in self.rows())
