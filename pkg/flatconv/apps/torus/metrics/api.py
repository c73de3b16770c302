"""
Metrics API

Distances between symmetric sets and measures on the circle, covering sums
and a box-counting dimension proxy.

The Hausdorff distance here is the SUM of the two directed distances
sup_E d(e, F) + sup_F d(E, f), not their max. The two are within a factor 2 of
each other, so they define the same topology.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from collections.abc import Sequence
from fractions import Fraction
from logging import getLogger

import numpy as np

from ....lib.rationals import as_fraction
from ..densities.api import autoconvolve_density, build_step_density, sup_norm_difference
from ..grid_measures.api import fourier_coefficients, support
from ..grid_measures.data import SymmetricCounts
from .data import Arc, FiniteSymmetricSet, IntervalCover, MetricBreakdown, circle_distance
from .exceptions import InvalidCover
from .serializers import breakdown_to_json, cover_to_json

# The public API that will be re-exported by flatconv.api.torus is listed in
# the __all__ entries below. Internal helper functions that are private to this
# module should start with an underscore.
__all__ = [
    "FiniteSymmetricSet",
    "Arc",
    "IntervalCover",
    "MetricBreakdown",
    "circle_distance",
    "set_from_counts",
    "directed_hausdorff",
    "hausdorff_distance",
    "fourier_sup_distance",
    "measure_distance",
    "density_distance",
    "density_distance_breakdown",
    "covering_check",
    "cover_contains",
    "critical_width",
    "box_dimension_estimate",
    "box_dimension_profile",
    "cover_to_json",
    "breakdown_to_json",
]


logger = getLogger(__name__)


def set_from_counts(m: SymmetricCounts) -> FiniteSymmetricSet:
    """
    The support of m as a set of circle positions k/n.
    """
    return FiniteSymmetricSet([m.grid.position(k) for k in support(m)])


def _distance_to_set(point: Fraction, points: Sequence[Fraction]) -> Fraction:
    """
    d(point, F) for sorted points of F in [0, 1), checking the two neighbours.
    """
    index = bisect_left(points, point)
    # Wrap around: index - 1 == -1 is the last point, index == len is the first.
    return min(
        circle_distance(point, points[index - 1]),
        circle_distance(point, points[index % len(points)]),
    )


def directed_hausdorff(e: FiniteSymmetricSet, f: FiniteSymmetricSet) -> Fraction:
    """
    sup over x in E of d(x, F).
    """
    return max(_distance_to_set(point, f.points) for point in e.points)


def hausdorff_distance(e: FiniteSymmetricSet, f: FiniteSymmetricSet) -> Fraction:
    """Hausdorff distance between two sets on the circle."""
    return directed_hausdorff(e, f) + directed_hausdorff(f, e)


def fourier_sup_distance(m1: SymmetricCounts, m2: SymmetricCounts) -> float:
    """
    sup over all integers r of |sigma1-hat(r) - sigma2-hat(r)|.

    Coefficients of a measure on the grid of order n are n-periodic in r, so
    the difference is lcm(n1, n2)-periodic and one period gives the exact sup.
    """
    period = math.lcm(m1.n, m2.n)
    r = np.arange(period)
    first = fourier_coefficients(m1)[r % m1.n]
    second = fourier_coefficients(m2)[r % m2.n]
    return float(np.max(np.abs(first - second)))


def measure_distance(m1: SymmetricCounts, m2: SymmetricCounts) -> float:
    """
    Hausdorff distance of the supports plus the Fourier sup distance.
    """
    return float(hausdorff_distance(set_from_counts(m1), set_from_counts(m2))) + fourier_sup_distance(m1, m2)


def density_distance_breakdown(m1: SymmetricCounts, m2: SymmetricCounts) -> MetricBreakdown:
    """
    The three terms of the density distance, kept apart.
    """
    return MetricBreakdown(
        hausdorff=hausdorff_distance(set_from_counts(m1), set_from_counts(m2)),
        fourier=fourier_sup_distance(m1, m2),
        density=sup_norm_difference(
            autoconvolve_density(build_step_density(m1)),
            autoconvolve_density(build_step_density(m2)),
        ),
    )


def density_distance(m1: SymmetricCounts, m2: SymmetricCounts) -> float:
    """
    measure_distance plus the sup-norm distance between the two g*g densities.
    """
    return density_distance_breakdown(m1, m2).total


def _merge_arcs(points: Sequence[Fraction], width: Fraction) -> list[Arc]:
    """
    Union of the closed arcs [p - width/2, p + width/2] as disjoint arcs.
    """
    half = width / 2
    merged: list[list[Fraction]] = []
    for point in points:
        start, end = point - half, point + half
        if merged and start <= merged[-1][1]:
            merged[-1][1] = max(merged[-1][1], end)
        else:
            merged.append([start, end])
    # Close the loop: the last arc may reach past the first one, one turn later.
    while len(merged) > 1 and merged[-1][1] >= merged[0][0] + 1:
        first = merged.pop(0)
        merged[-1][1] = max(merged[-1][1], first[1] + 1)
    if merged[-1][1] - merged[-1][0] >= 1:
        return [Arc(center=0, width=1)]
    return [Arc(center=(start + end) / 2, width=end - start) for start, end in merged]


def covering_check(
    e: FiniteSymmetricSet,
    alpha: float,
    m_index: int,
    width: Fraction | float | str,
) -> tuple[IntervalCover, bool]:
    """
    Cover E with one arc of the given width per point and test the covering sum.

    Overlapping arcs are merged first so no length is counted twice. Returns the
    cover and whether sum |I| ** (alpha + 1/m_index) < 1/m_index.
    """
    width = as_fraction(width)
    if not 0 < width < 1:
        raise InvalidCover(f"width must lie in (0, 1), got {width}")
    if not 0.5 <= alpha < 1:
        raise InvalidCover(f"alpha must lie in [1/2, 1), got {alpha}")
    if m_index < 1:
        raise InvalidCover(f"m_index must be at least 1, got {m_index}")
    cover = IntervalCover(_merge_arcs(e.points, width))
    total = cover.covering_sum(alpha + 1 / m_index)
    logger.debug("Cover of %d points by %d arcs: covering sum %.6g", len(e), len(cover.arcs), total)
    return cover, total < 1 / m_index


def cover_contains(cover: IntervalCover, e: FiniteSymmetricSet) -> bool:
    """Whether every point of ``e`` lies on some arc of ``cover``."""
    return all(any(arc.contains(point) for arc in cover.arcs) for point in e.points)


def critical_width(point_count: int, alpha: float, m_index: int) -> float:
    """
    Width at which point_count disjoint arcs reach the covering sum 1/m_index.
    """
    return (1 / (point_count * m_index)) ** (1 / (alpha + 1 / m_index))


def _occupied_cells(e: FiniteSymmetricSet, order: int) -> int:
    return len({math.floor(point * order) for point in e.points})


def box_dimension_estimate(e: FiniteSymmetricSet, n: int) -> float:
    """
    log(#cells of size 1/n meeting E) / log(n).

    A single-scale proxy for the dimension of a limit set, only meaningful at
    the scale the set was built at.
    """
    if n < 2:
        raise ValueError(f"the scale 1/n needs n >= 2, got {n}")
    return math.log(_occupied_cells(e, n)) / math.log(n)


def box_dimension_profile(e: FiniteSymmetricSet, orders: Sequence[int]) -> float:
    """
    Least-squares slope of log(#occupied cells) against log(order).
    """
    if len(orders) < 2:
        raise ValueError("a slope needs at least two scales")
    counts = [_occupied_cells(e, order) for order in orders]
    return float(np.polyfit(np.log(orders), np.log(counts), 1)[0])
