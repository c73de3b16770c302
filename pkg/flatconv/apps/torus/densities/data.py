"""
Exact periodic densities on the grid {k/n}.

Both types store their values as integer numerators over one positive common
denominator, like grid_measures.AtomVector does for weights.
"""
from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction

from attrs import define, field

from ..grid_measures.data import GridSpec
from .exceptions import InvalidDensity


def _int_tuple(values: Iterable) -> tuple[int, ...]:
    return tuple(int(value) for value in values)


def _check_shape(grid: GridSpec, numerators: tuple[int, ...], denominator: int) -> None:
    if denominator <= 0:
        raise InvalidDensity(f"denominator must be positive, got {denominator}")
    if len(numerators) != grid.n:
        raise InvalidDensity(f"expected {grid.n} values, got {len(numerators)}")


@define(frozen=True)
class StepDensity:
    """
    A density constant on each cell [k/n - 1/2n, k/n + 1/2n) of the grid.

    The value on cell k is ``numerators[k] / denominator``. Step densities
    built from a measure are non-negative, symmetric and have mass 1, i.e.
    ``(1/n) * sum(values) == 1``.
    """

    grid: GridSpec
    numerators: tuple[int, ...] = field(converter=_int_tuple)
    denominator: int

    def __attrs_post_init__(self) -> None:
        n = self.grid.n
        _check_shape(self.grid, self.numerators, self.denominator)
        if any(value < 0 for value in self.numerators):
            raise InvalidDensity("cell values must be non-negative")
        for k in range(1, n):
            if self.numerators[k] != self.numerators[n - k]:
                raise InvalidDensity(f"cell values at {k} and {n - k} differ")
        if sum(self.numerators) != n * self.denominator:
            raise InvalidDensity("cell values must have mean 1")

    @property
    def values(self) -> tuple[Fraction, ...]:
        """Cell values, cell ``k`` being centered on ``k/n`` with width ``1/n``."""
        return tuple(Fraction(value, self.denominator) for value in self.numerators)

    def value(self, k: int) -> Fraction:
        """Value on cell ``k`` (taken mod n)."""
        return Fraction(self.numerators[k % self.grid.n], self.denominator)


@define(frozen=True)
class PiecewiseLinearPeriodic:
    """
    A continuous 1-periodic function, linear between consecutive grid nodes.

    The value at node k/n is ``numerators[k] / denominator``. Continuity holds
    by construction since only node values are stored.
    """

    grid: GridSpec
    numerators: tuple[int, ...] = field(converter=_int_tuple)
    denominator: int

    def __attrs_post_init__(self) -> None:
        _check_shape(self.grid, self.numerators, self.denominator)

    @classmethod
    def from_values(cls, grid: GridSpec, values: Iterable[Fraction | int]) -> PiecewiseLinearPeriodic:
        """Build from node values."""
        fractions = [Fraction(value) for value in values]
        denominator = math.lcm(*(value.denominator for value in fractions))
        return cls(
            grid=grid,
            numerators=[value.numerator * (denominator // value.denominator) for value in fractions],
            denominator=denominator,
        )

    @property
    def values(self) -> tuple[Fraction, ...]:
        """Node values at ``k/n``."""
        return tuple(Fraction(value, self.denominator) for value in self.numerators)

    def value(self, k: int) -> Fraction:
        """Value at node ``k`` (taken mod n)."""
        return Fraction(self.numerators[k % self.grid.n], self.denominator)

