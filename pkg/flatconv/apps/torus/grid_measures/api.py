"""
Grid Measures API

Symmetric atomic probability measures on the grid {k/n} of the circle, their
autoconvolutions and their Fourier coefficients.

The exact paths (``autoconvolve``, ``max_flatness_deviation``) work with
integers and rationals only. ``autoconvolve_fast`` goes through a float FFT and
is only trusted after its result has been rounded back to integer pair counts.
"""
from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction
from logging import getLogger

import numpy as np

from .data import AtomVector, GridSpec, SymmetricCounts
from .exceptions import EmptyMeasure, InvalidAtom, RoundingUnsafe
from .serializers import atoms_from_json, atoms_to_json, counts_from_json, counts_to_json

# The public API that will be re-exported by flatconv.api.torus is listed in
# the __all__ entries below. Internal helper functions that are private to this
# module should start with an underscore. If a function does not start with an
# underscore AND it is not in __all__, that function is considered to be
# callable only by other apps in the torus package.
__all__ = [
    "GridSpec",
    "SymmetricCounts",
    "AtomVector",
    "from_points",
    "support",
    "autoconvolve",
    "autoconvolve_bruteforce",
    "autoconvolve_fast",
    "fourier_coefficient",
    "fourier_coefficients",
    "autoconvolution_fourier_check",
    "max_flatness_deviation",
    "counts_to_json",
    "counts_from_json",
    "atoms_to_json",
    "atoms_from_json",
]


logger = getLogger(__name__)

# A float convolution value is only rounded when it is this close to an integer.
ROUNDING_LIMIT = 0.01

# Products are accumulated in int64 when they provably can't overflow.
_INT64_LIMIT = 1 << 62

# Rows of the outer sum handled per numpy call in the exact convolution.
_BLOCK_ROWS = 256


def from_points(grid: GridSpec, points: Sequence[int]) -> SymmetricCounts:
    """
    Build the symmetric measure (1/2N) sum_j (delta_{x_j} + delta_{-x_j}).

    ``points`` are residues in 1..n-1 and may repeat; N is ``len(points)``.
    """
    n = grid.n
    if len(points) == 0:
        raise EmptyMeasure()
    counts = [0] * n
    for point in points:
        residue = int(point)
        if not 1 <= residue < n:
            raise InvalidAtom(residue, n)
        counts[residue] += 1
        counts[n - residue] += 1
    return SymmetricCounts(grid=grid, counts=counts, pair_count=len(points))


def support(m: SymmetricCounts) -> list[int]:
    """
    Return the residues carrying at least one atom, in increasing order.
    """
    return [k for k, count in enumerate(m.counts) if count]


def cyclic_self_convolution(values: Sequence[int], n: int) -> list[int]:
    """
    Exact cyclic self-convolution: out[k] = sum over i + j = k (mod n) of values[i] * values[j].

    Only the support of ``values`` is visited, so the cost is quadratic in the
    number of non-zero entries rather than in n.
    """
    support_idx = [k for k, value in enumerate(values) if value]
    weights = [int(values[k]) for k in support_idx]
    if not weights:
        return [0] * n

    peak = max(abs(weight) for weight in weights)
    if peak * peak * len(weights) * len(weights) < _INT64_LIMIT:
        idx = np.asarray(support_idx, dtype=np.int64)
        wts = np.asarray(weights, dtype=np.int64)
        out = np.zeros(n, dtype=np.int64)
        for start in range(0, idx.size, _BLOCK_ROWS):
            rows = slice(start, start + _BLOCK_ROWS)
            sums = np.add.outer(idx[rows], idx) % n
            products = np.multiply.outer(wts[rows], wts)
            np.add.at(out, sums.ravel(), products.ravel())
        return [int(value) for value in out]

    # Big numerators: stay in Python integers.
    exact = [0] * n
    for i, a in zip(support_idx, weights):
        for j, b in zip(support_idx, weights):
            exact[(i + j) % n] += a * b
    return exact


def autoconvolve(m: SymmetricCounts) -> AtomVector:
    """
    Exact autoconvolution sigma*sigma on the grid.

    Weight k is (sum over i + j = k (mod n) of c_i c_j) / (4 N^2).
    """
    pair_counts = cyclic_self_convolution(m.counts, m.n)
    return AtomVector(grid=m.grid, numerators=pair_counts, denominator=4 * m.pair_count ** 2)


def autoconvolve_bruteforce(m: SymmetricCounts) -> AtomVector:
    """
    The O(n^2) double loop over every ordered pair of grid points.

    Only meant as an oracle for tests of the faster paths.
    """
    n = m.n
    pair_counts = [0] * n
    for i, ci in enumerate(m.counts):
        for j, cj in enumerate(m.counts):
            pair_counts[(i + j) % n] += ci * cj
    return AtomVector(grid=m.grid, numerators=pair_counts, denominator=4 * m.pair_count ** 2)


def autoconvolve_fast(m: SymmetricCounts) -> AtomVector:
    """
    Autoconvolution through a real FFT, rounded back to exact pair counts.

    Raises RoundingUnsafe when any float value is farther than ROUNDING_LIMIT
    from the integer it would be rounded to.
    """
    n = m.n
    spectrum = np.fft.rfft(m.as_array().astype(np.float64))
    raw = np.fft.irfft(spectrum * spectrum, n)
    rounded = np.rint(raw)
    gaps = np.abs(raw - rounded)
    worst = int(np.argmax(gaps))
    if gaps[worst] > ROUNDING_LIMIT:
        raise RoundingUnsafe(worst, float(gaps[worst]))
    if gaps[worst] > ROUNDING_LIMIT / 10:
        logger.warning("FFT autoconvolution for n=%d is %.3g away from integers", n, gaps[worst])
    return AtomVector(
        grid=m.grid,
        numerators=[max(int(value), 0) for value in rounded],
        denominator=4 * m.pair_count ** 2,
    )


def fourier_coefficient(m: SymmetricCounts, r: int) -> float:
    """
    sigma-hat(r) = (1/2N) sum_k c_k cos(2 pi k r / n).

    The imaginary part vanishes because the measure is symmetric. The value is
    n-periodic in r.
    """
    n = m.n
    support_idx = np.asarray(support(m), dtype=np.int64)
    counts = np.asarray([m.counts[k] for k in support_idx], dtype=np.float64)
    # Reduce k*r mod n in integers before scaling, so large r lose no precision.
    phases = (support_idx * (int(r) % n)) % n
    return float(np.dot(counts, np.cos(2 * np.pi * phases / n)) / (2 * m.pair_count))


def fourier_coefficients(m: SymmetricCounts) -> np.ndarray:
    """
    Every Fourier coefficient sigma-hat(0..n-1) in one FFT pass.
    """
    return np.fft.fft(m.as_array().astype(np.float64)).real / (2 * m.pair_count)


def autoconvolution_fourier_check(m: SymmetricCounts, tolerance: float = 1e-9) -> bool:
    """
    Check the autoconvolution against the convolution theorem.

    The transform of sigma*sigma must be sigma-hat squared at every r, and the
    weight at the origin must equal (1/n) sum_r sigma-hat(r)^2.
    """
    coefficients = fourier_coefficients(m)
    weights = np.asarray([float(weight) for weight in autoconvolve(m).weights])
    transform = np.fft.fft(weights)
    if not np.allclose(transform.real, coefficients ** 2, rtol=0, atol=tolerance):
        return False
    if np.max(np.abs(transform.imag)) > tolerance:
        return False
    return abs(weights[0] - float(np.sum(coefficients ** 2)) / m.n) <= tolerance


def max_flatness_deviation(v: AtomVector, *, exclude_origin: bool = False) -> Fraction:
    """
    Return max_k |w_k - 1/n| exactly.

    With ``exclude_origin`` the scan skips k = 0, i.e. it ranges over the
    non-zero grid points only. A symmetric measure always puts mass at least
    1/(2N) on the origin of its autoconvolution, so that is the range on
    which flatness can actually be expected.
    """
    n = v.grid.n
    start = 1 if exclude_origin else 0
    # |p/D - 1/n| = |n p - D| / (n D)
    worst = max(abs(n * numerator - v.denominator) for numerator in v.numerators[start:])
    return Fraction(worst, n * v.denominator)
