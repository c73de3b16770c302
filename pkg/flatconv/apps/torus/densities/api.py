"""
Densities API

The step density g obtained by spreading each atom of a grid measure uniformly
over its cell, and its autoconvolution g*g.

Cells have full width 1/n, so the convolution of two cell indicators is a hat
of half-width 1/n and the translated hats form a partition of unity. As a
result g*g is exactly linear between grid nodes and its node values are n times
the weights of the atomic autoconvolution sigma*sigma. All values here are
exact rationals.
"""
from __future__ import annotations

import math
from fractions import Fraction
from logging import getLogger

from ..grid_measures.api import cyclic_self_convolution
from ..grid_measures.data import GridSpec, SymmetricCounts
from .data import PiecewiseLinearPeriodic, StepDensity
from .exceptions import InvalidDensity
from .serializers import DENSITY_CSV_HEADER, density_from_json, density_to_json, density_to_rows

# The public API that will be re-exported by flatconv.api.torus is listed in
# the __all__ entries below. Internal helper functions that are private to this
# module should start with an underscore.
__all__ = [
    "StepDensity",
    "PiecewiseLinearPeriodic",
    "build_step_density",
    "autoconvolve_density",
    "cell_value",
    "evaluate",
    "refine",
    "integral",
    "sup_deviation_from_one",
    "sup_norm_difference",
    "density_cap",
    "DENSITY_CSV_HEADER",
    "density_to_json",
    "density_from_json",
    "density_to_rows",
]


logger = getLogger(__name__)


def build_step_density(m: SymmetricCounts) -> StepDensity:
    """
    g = sigma * (n 1_[-1/2n, 1/2n]), i.e. the value n c_k / 2N on cell k.
    """
    return StepDensity(
        grid=m.grid,
        numerators=[m.n * count for count in m.counts],
        denominator=2 * m.pair_count,
    )


def autoconvolve_density(g: StepDensity) -> PiecewiseLinearPeriodic:
    """
    g*g as node values u_k = (1/n) sum over i + j = k (mod n) of v_i v_j.
    """
    n = g.grid.n
    return PiecewiseLinearPeriodic(
        grid=g.grid,
        numerators=cyclic_self_convolution(g.numerators, n),
        denominator=n * g.denominator ** 2,
    )


def _locate(n: int, t: Fraction | int) -> tuple[int, Fraction]:
    """
    Split t*n (mod n) into its integer part k and fractional part in [0, 1).
    """
    scaled = (Fraction(t) * n) % n
    k = math.floor(scaled)
    return k, scaled - k


def cell_value(g: StepDensity, t: Fraction | int) -> Fraction:
    """
    Value of the step density at position t.
    """
    k, frac = _locate(g.grid.n, t)
    # Cell k is [k/n - 1/2n, k/n + 1/2n).
    return g.value(k + 1 if frac >= Fraction(1, 2) else k)


def evaluate(f: PiecewiseLinearPeriodic, t: Fraction | int) -> Fraction:
    """
    Exact value of f at the rational position t (any real t, taken mod 1).
    """
    k, frac = _locate(f.grid.n, t)
    left = f.value(k)
    return left + frac * (f.value(k + 1) - left)


def refine(f: PiecewiseLinearPeriodic, order: int) -> PiecewiseLinearPeriodic:
    """
    The same function on the finer grid of the given order.

    ``order`` must be an odd multiple of f's grid order.
    """
    n = f.grid.n
    if order % n:
        raise InvalidDensity(f"grid order {order} is not a multiple of {n}")
    step = order // n
    numerators = []
    for k in range(n):
        left, right = f.numerators[k], f.numerators[(k + 1) % n]
        numerators.extend((step - i) * left + i * right for i in range(step))
    return PiecewiseLinearPeriodic(grid=GridSpec(order), numerators=numerators, denominator=step * f.denominator)


def integral(f: StepDensity | PiecewiseLinearPeriodic) -> Fraction:
    """
    Exact integral over one period.

    Both for step functions (cells of width 1/n) and for piecewise-linear ones
    (trapezoids), the integral is the mean of the stored values.
    """
    return Fraction(sum(f.numerators), f.grid.n * f.denominator)


def sup_deviation_from_one(f: PiecewiseLinearPeriodic, *, exclude_origin: bool = False) -> Fraction:
    """
    sup_t |f(t) - 1|, which for a piecewise-linear f is attained at a node.

    With ``exclude_origin`` the sup only runs over |t| >= 1/n, i.e. over the
    nodes k != 0.
    """
    start = 1 if exclude_origin else 0
    worst = max(abs(value - f.denominator) for value in f.numerators[start:])
    return Fraction(worst, f.denominator)


def sup_norm_difference(f1: PiecewiseLinearPeriodic, f2: PiecewiseLinearPeriodic) -> Fraction:
    """
    sup_t |f1(t) - f2(t)|.

    The difference is linear between consecutive points of the merged node set
    {k/n1} | {k/n2}, so the sup is a max over those n1 + n2 points at most.
    Grids of coprime order never get refined to lcm(n1, n2).
    """
    n1, n2 = f1.grid.n, f2.grid.n
    if n1 == n2:
        worst = max(
            abs(x * f2.denominator - y * f1.denominator) for x, y in zip(f1.numerators, f2.numerators)
        )
        return Fraction(worst, f1.denominator * f2.denominator)
    nodes = {Fraction(k, n1) for k in range(n1)} | {Fraction(k, n2) for k in range(n2)}
    logger.debug("Comparing grids of order %d and %d on %d merged nodes", n1, n2, len(nodes))
    return max(abs(evaluate(f1, t) - evaluate(f2, t)) for t in nodes)


def density_cap(m: SymmetricCounts, multiplicity_cap: int) -> tuple[Fraction, Fraction]:
    """
    Return (max_k v_k, 2 n M / N).

    When no grid point carries M atoms the first is below n M / N, well under
    the sup-norm cap 2 n M / N on g.
    """
    g = build_step_density(m)
    return max(g.values), Fraction(2 * m.n * multiplicity_cap, m.pair_count)
