"""
Value types for symmetric atomic measures on the grid {k/n} of the circle.

The circle has circumference 1 and the grid of order n is the set of residues
0..n-1 (atom k sits at position k/n). Atoms are never placed at the origin.

Everything here is immutable and exact: atom counts are integers and weights
are rationals, so flatness deviations can be compared without tolerances.
"""
from __future__ import annotations

import math
from collections.abc import Iterable
from fractions import Fraction

import numpy as np
from attrs import define, field

from .exceptions import EmptyMeasure, InvalidGrid, InvalidMeasure


def _int_tuple(values: Iterable) -> tuple[int, ...]:
    return tuple(int(value) for value in values)


def _check_order(_instance, _attribute, n) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 3 or n % 2 == 0:
        raise InvalidGrid(n)


@define(frozen=True)
class GridSpec:
    """
    The grid {k/n : k = 0..n-1} of odd order n >= 3.
    """

    n: int = field(validator=_check_order)

    def position(self, residue: int) -> Fraction:
        """
        Position on the circle (in [0, 1)) of the grid point ``residue``.
        """
        return Fraction(residue % self.n, self.n)


@define(frozen=True)
class SymmetricCounts:
    """
    A symmetric probability measure on the grid, as integer atom counts.

    ``counts[k]`` is the number of atoms (reflections included) at k/n, so the
    measure gives mass ``counts[k] / (2 * pair_count)`` to that point. The
    invariants are ``counts[0] == 0``, ``counts[k] == counts[n - k]`` and
    ``sum(counts) == 2 * pair_count``.
    """

    grid: GridSpec
    counts: tuple[int, ...] = field(converter=_int_tuple)
    pair_count: int

    def __attrs_post_init__(self) -> None:
        n = self.grid.n
        if self.pair_count <= 0:
            raise EmptyMeasure()
        if len(self.counts) != n:
            raise InvalidMeasure(f"expected {n} counts, got {len(self.counts)}")
        if self.counts[0] != 0:
            raise InvalidMeasure("atoms are not allowed at the origin")
        for k in range(1, n):
            if self.counts[k] < 0:
                raise InvalidMeasure(f"negative count at residue {k}")
            if self.counts[k] != self.counts[n - k]:
                raise InvalidMeasure(f"counts at {k} and {n - k} differ")
        if sum(self.counts) != 2 * self.pair_count:
            raise InvalidMeasure(f"counts add up to {sum(self.counts)}, expected {2 * self.pair_count}")

    @property
    def n(self) -> int:
        """Order of the grid."""
        return self.grid.n

    def mass(self, residue: int) -> Fraction:
        """
        Exact mass of the atom at ``residue / n``.
        """
        return Fraction(self.counts[residue % self.n], 2 * self.pair_count)

    def as_array(self) -> np.ndarray:
        """Counts as an int64 array."""
        return np.asarray(self.counts, dtype=np.int64)


@define(frozen=True, eq=False)
class AtomVector:
    """
    Exact rational weights of a (not necessarily symmetric) grid measure.

    Weights are stored over a common denominator: weight k is
    ``numerators[k] / denominator``. Autoconvolutions come out with
    denominator ``4 * N**2`` and numerators equal to ordered pair counts.

    Equality and hashing go by grid and weights, so the same measure over
    two different common denominators compares equal.
    """

    grid: GridSpec
    numerators: tuple[int, ...] = field(converter=_int_tuple)
    denominator: int

    def __attrs_post_init__(self) -> None:
        if self.denominator <= 0:
            raise InvalidMeasure(f"denominator must be positive, got {self.denominator}")
        if len(self.numerators) != self.grid.n:
            raise InvalidMeasure(f"expected {self.grid.n} weights, got {len(self.numerators)}")
        if any(value < 0 for value in self.numerators):
            raise InvalidMeasure("weights must be non-negative")
        if sum(self.numerators) != self.denominator:
            raise InvalidMeasure("weights must add up to 1")

    @classmethod
    def from_weights(cls, grid: GridSpec, weights: Iterable[Fraction | int]) -> AtomVector:
        """
        Build an AtomVector from arbitrary exact rational weights.
        """
        fractions = [Fraction(weight) for weight in weights]
        denominator = math.lcm(*(weight.denominator for weight in fractions))
        return cls(
            grid=grid,
            numerators=[weight.numerator * (denominator // weight.denominator) for weight in fractions],
            denominator=denominator,
        )

    @property
    def weights(self) -> tuple[Fraction, ...]:
        """Weight at every residue."""
        return tuple(Fraction(value, self.denominator) for value in self.numerators)

    def weight(self, residue: int) -> Fraction:
        """Weight at ``residue``."""
        return Fraction(self.numerators[residue % self.grid.n], self.denominator)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AtomVector):
            return NotImplemented
        return self.grid == other.grid and all(
            a * other.denominator == b * self.denominator for a, b in zip(self.numerators, other.numerators)
        )

    def __hash__(self) -> int:
        return hash((self.grid, self.weights))
