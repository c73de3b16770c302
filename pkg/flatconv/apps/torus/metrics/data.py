"""
Value types for the metric toolkit: finite symmetric sets, arc covers and
metric breakdowns.
"""
from __future__ import annotations

from collections.abc import Iterable
from fractions import Fraction

from attrs import define, field

from ....lib.rationals import as_fraction
from .exceptions import AsymmetricSet, EmptySet, InvalidCover


def _normalize_points(points: Iterable) -> tuple[Fraction, ...]:
    return tuple(sorted({as_fraction(point) % 1 for point in points}))


def _circle_position(value) -> Fraction:
    return as_fraction(value) % 1


def circle_distance(x: Fraction, y: Fraction) -> Fraction:
    """
    min over integers m of |x - y + m| on the circle of circumference 1.
    """
    gap = (Fraction(x) - Fraction(y)) % 1
    return min(gap, 1 - gap)


@define(frozen=True)
class FiniteSymmetricSet:
    """
    A non-empty finite subset of the circle, closed under negation.

    Points are stored reduced to [0, 1), sorted and deduplicated.
    """

    points: tuple[Fraction, ...] = field(converter=_normalize_points)

    def __attrs_post_init__(self) -> None:
        if not self.points:
            raise EmptySet()
        present = set(self.points)
        for point in self.points:
            if (-point) % 1 not in present:
                raise AsymmetricSet(point)

    def __len__(self) -> int:
        return len(self.points)

    def negated(self) -> FiniteSymmetricSet:
        """The same set with every point replaced by its negative."""
        return FiniteSymmetricSet([-point for point in self.points])


@define(frozen=True)
class Arc:
    """
    The closed arc of the given width centered at ``center``.

    A width of 1 or more is the whole circle.
    """

    center: Fraction = field(converter=_circle_position)
    width: Fraction = field(converter=as_fraction)

    def __attrs_post_init__(self) -> None:
        if self.width <= 0:
            raise InvalidCover(f"arc widths must be positive, got {self.width}")

    def contains(self, point: Fraction) -> bool:
        """Whether ``point`` lies on the closed arc."""
        return 2 * circle_distance(self.center, point) <= self.width


@define(frozen=True)
class IntervalCover:
    """
    A finite family of arcs, symmetric under negation.
    """

    arcs: tuple[Arc, ...] = field(converter=tuple)

    def __attrs_post_init__(self) -> None:
        present = {(arc.center, arc.width) for arc in self.arcs}
        for arc in self.arcs:
            if ((-arc.center) % 1, arc.width) not in present:
                raise InvalidCover(f"the arc at {arc.center} has no mirror image")

    def covering_sum(self, exponent: float) -> float:
        """
        sum over arcs of width ** exponent.
        """
        return sum(float(arc.width) ** exponent for arc in self.arcs)


@define(frozen=True)
class MetricBreakdown:
    """
    The three terms of the density distance between two measures.

    ``hausdorff`` compares supports, ``fourier`` is the sup of the coefficient
    differences and ``density`` the sup-norm distance between the two g*g.
    """

    hausdorff: Fraction
    fourier: float
    density: Fraction

    @property
    def measure_distance(self) -> float:
        """Sum of the Hausdorff and Fourier terms."""
        return float(self.hausdorff) + self.fourier

    @property
    def total(self) -> float:
        """Sum of all three terms."""
        return self.measure_distance + float(self.density)
