"""
Concentration API

The two probability bounds behind the construction, and the martingale that
tracks the pair count of the symmetrized sample at a fixed residue r.

Pair counts
-----------

Draw X_1..X_N uniformly from 1..n-1 and symmetrize them into 2N atoms. P(r) is
the number of ordered pairs of atoms whose positions add up to r (mod n), so
that (N sigma * N sigma)(r/n) = P(r) / 4. The pairs first completed by X_j are

    D_j = S(X_j) + sum over v < j of T(X_j, X_v), where
    S(x) = [2x = r] + [-2x = r] + 2 [r = 0]
    T(x, y) = 2 ([x + y = r] + [x - y = r] + [y - x = r] + [-x - y = r])

and P(r) = D_1 + ... + D_N. Since n is odd, x -> 2x permutes 1..n-1 and the
conditional means of D_j given X_1..X_j-1 come out in closed form:

    s = 2 (1 - [r = 0]) / (n - 1) + 2 [r = 0]
    t(y) = 2 (4 - 2 [y = r] - 2 [y = -r]) / (n - 1)
    tau = mean of t(y) over y = 2 (4 - 4 (1 - [r = 0]) / (n - 1)) / (n - 1)

Everything is exact (fractions over n - 1).
"""
from __future__ import annotations

import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from logging import getLogger

import numpy as np

from ....lib.config import get_worker_count
from ....lib.rationals import as_fraction
from ....lib.seeding import derive_seed, draw_residues, draw_signs
from ..constructions.api import choose_multiplicity_cap, phi_value
from ..constructions.data import Phi
from ..grid_measures.api import cyclic_self_convolution
from .data import Centering, MartingalePath, TailExperiment
from .exceptions import CapTripped, InvalidVariance, OutOfHypothesis
from .serializers import TAIL_CSV_HEADER, tail_to_rows

# The public API that will be re-exported by flatconv.api.torus is listed in
# the __all__ entries below. Internal helper functions that are private to this
# module should start with an underscore.
__all__ = [
    "Centering",
    "MartingalePath",
    "TailExperiment",
    "binomial_tail_bound",
    "binomial_tail_bound_exact",
    "exact_binomial_tail",
    "azuma_bound",
    "variance_proxy",
    "deviation_threshold",
    "pair_count",
    "expected_pair_count",
    "pair_count_compensator",
    "increment_sequence",
    "conditional_increment_mean",
    "telescoping_identity_check",
    "deviation_tail_experiment",
    "simulate_bounded_martingales",
    "TAIL_CSV_HEADER",
    "tail_to_rows",
]


logger = getLogger(__name__)

DEFAULT_GRID_POINTS = 17


def _check_binomial(pair_count: int, p: Fraction | float, m: int) -> None:
    if pair_count < 1:
        raise OutOfHypothesis(f"N must be positive, got {pair_count}")
    if not 0 <= p <= 1:
        raise OutOfHypothesis(f"p must lie in [0, 1], got {p}")
    if pair_count * p >= 1:
        raise OutOfHypothesis(f"N p must be below 1, got {pair_count * p}")
    if m < 2:
        raise OutOfHypothesis(f"m must be at least 2, got {m}")


def binomial_tail_bound(pair_count: int, p: float, m: int) -> float:
    """
    2 (N p)^m / m!, a bound on P(Y_1 + ... + Y_N >= m) for independent
    Bernoulli(p) variables when N p < 1.
    """
    _check_binomial(pair_count, p, m)
    return 2 * (pair_count * p) ** m / math.factorial(m)


def binomial_tail_bound_exact(pair_count: int, p: Fraction | str | float, m: int) -> Fraction:
    """
    The same bound as an exact rational, for rational p.
    """
    p = as_fraction(p)
    _check_binomial(pair_count, p, m)
    return 2 * (pair_count * p) ** m / math.factorial(m)


def exact_binomial_tail(pair_count: int, p: Fraction | str | float, m: int) -> Fraction:
    """
    P(Binomial(N, p) >= m), exactly.
    """
    p = as_fraction(p)
    q = 1 - p
    return sum(
        (math.comb(pair_count, k) * p ** k * q ** (pair_count - k) for k in range(max(m, 0), pair_count + 1)),
        Fraction(0),
    )


def azuma_bound(variance: float, x: float) -> float:
    """
    exp(-x^2 / 2A) for a martingale whose increments satisfy the moment
    condition with variance proxy A.
    """
    if not variance > 0:
        raise InvalidVariance(variance)
    if x < 0:
        raise OutOfHypothesis(f"x must be non-negative, got {x}")
    return math.exp(-x * x / (2 * variance))


def variance_proxy(n: int, pair_count: int, multiplicity_cap: int) -> float:
    """
    A = 8 N^2 (M^2 + 1) / n.
    """
    return 8 * pair_count ** 2 * (multiplicity_cap ** 2 + 1) / n


def deviation_threshold(n: int, pair_count: int, epsilon: float, phi: Phi | str = Phi.LOG) -> float:
    """
    x = epsilon N phi(n) sqrt(ln n) / sqrt(n).
    """
    return epsilon * pair_count * phi_value(phi, n) * math.sqrt(math.log(n)) / math.sqrt(n)


def _self_mean(n: int, r: int) -> Fraction:
    if r % n == 0:
        return Fraction(2)
    return Fraction(2, n - 1)


def _cross_mean(n: int, r: int, y: int) -> Fraction:
    hits = int((y - r) % n == 0) + int((y + r) % n == 0)
    return Fraction(2 * (4 - 2 * hits), n - 1)


def _mean_cross_mean(n: int, r: int) -> Fraction:
    off_origin = 0 if r % n == 0 else 1
    return 2 * (4 - Fraction(4 * off_origin, n - 1)) / (n - 1)


def _check_samples(n: int, samples: Sequence[int]) -> None:
    for sample in samples:
        if not 1 <= sample < n:
            raise OutOfHypothesis(f"samples must be residues in 1..{n - 1}, got {sample}")


def pair_count(n: int, samples: Sequence[int], r: int) -> int:
    """
    P(r): ordered pairs of the 2N symmetrized atoms adding up to r (mod n).
    """
    counts = [0] * n
    for sample in samples:
        counts[sample % n] += 1
        counts[-sample % n] += 1
    return sum(counts[k] * counts[(r - k) % n] for k in range(n))


def expected_pair_count(n: int, count: int, r: int) -> Fraction:
    """
    E[P(r)] = N s + N (N - 1) / 2 * tau.
    """
    return count * _self_mean(n, r) + Fraction(count * (count - 1), 2) * _mean_cross_mean(n, r)


def pair_count_compensator(n: int, samples: Sequence[int], r: int) -> Fraction:
    """
    Sum over j of E[D_j | X_1..X_j-1] = s + sum over v < j of t(X_v).
    """
    total = Fraction(0)
    history = Fraction(0)
    for sample in samples:
        total += _self_mean(n, r) + history
        history += _cross_mean(n, r, sample)
    return total


def increment_sequence(
    n: int,
    samples: Sequence[int],
    r: int,
    multiplicity_cap: int,
    centering: Centering | str = Centering.COMPENSATOR,
    *,
    total_steps: int | None = None,
) -> MartingalePath:
    """
    The increments Y_j of the pair-count martingale at residue r.

    Y_j is the pair mass D_j / 4 completed by X_j minus its conditional mean
    (plus the look-ahead term for DOOB centering). As soon as the history
    X_1..X_j-1 puts ``multiplicity_cap`` atoms on a grid point, Y_j and every
    later increment is 0. ``total_steps`` is N for the look-ahead term and
    defaults to ``len(samples)``.
    """
    centering = Centering(centering)
    _check_samples(n, samples)
    steps = len(samples) if total_steps is None else total_steps
    if steps < len(samples):
        raise OutOfHypothesis(f"total_steps {steps} is shorter than the {len(samples)} samples")
    r %= n
    self_mean = _self_mean(n, r)
    tau = _mean_cross_mean(n, r)

    drawn = [0] * n
    atoms = [0] * n
    cross_history = Fraction(0)
    increments: list[Fraction] = []
    tripped_at = None
    for j, x in enumerate(samples, start=1):
        if tripped_at is None and max(atoms) >= multiplicity_cap:
            tripped_at = j
        if tripped_at is not None:
            increments.append(Fraction(0))
            continue
        new_pairs = int((2 * x - r) % n == 0) + int((-2 * x - r) % n == 0) + (2 if r == 0 else 0)
        new_pairs += 2 * (drawn[(r - x) % n] + drawn[(x - r) % n] + drawn[(x + r) % n] + drawn[(-x - r) % n])
        increment = new_pairs - self_mean - cross_history
        if centering is Centering.DOOB:
            increment += (steps - j) * (_cross_mean(n, r, x) - tau)
        increments.append(increment / 4)
        drawn[x] += 1
        atoms[x] += 1
        atoms[n - x] += 1
        cross_history += _cross_mean(n, r, x)
    return MartingalePath(increments=increments, tripped_at=tripped_at)


def conditional_increment_mean(
    n: int,
    history: Sequence[int],
    r: int,
    multiplicity_cap: int,
    centering: Centering | str = Centering.COMPENSATOR,
    *,
    total_steps: int | None = None,
) -> Fraction:
    """
    Average of the next increment over every possible next sample, exactly.
    """
    steps = len(history) + 1 if total_steps is None else total_steps
    total = sum(
        (
            increment_sequence(n, [*history, x], r, multiplicity_cap, centering, total_steps=steps).increments[-1]
            for x in range(1, n)
        ),
        Fraction(0),
    )
    return total / (n - 1)


def telescoping_identity_check(
    n: int,
    samples: Sequence[int],
    r: int,
    multiplicity_cap: int,
    centering: Centering | str = Centering.DOOB,
) -> bool:
    """
    Check that 4 W_N equals the centered pair count at r.

    For DOOB centering the reference is E[P(r)], for COMPENSATOR it is the
    predictable compensator. Raises CapTripped when the cap stopped the path,
    since the increments no longer add up to the pair count then.
    """
    centering = Centering(centering)
    path = increment_sequence(n, samples, r, multiplicity_cap, centering)
    if path.tripped_at is not None:
        raise CapTripped(path.tripped_at)
    if centering is Centering.DOOB:
        reference = expected_pair_count(n, len(samples), r)
    else:
        reference = pair_count_compensator(n, samples, r)
    return 4 * path.final == pair_count(n, samples, r) - reference


def _tail_frequencies(statistics: np.ndarray, x_values: np.ndarray) -> list[float]:
    return [float(np.mean(statistics >= x)) for x in x_values]


def _map_trials(fn, trials: int, workers: int | None) -> np.ndarray:
    workers = workers or get_worker_count()
    if workers <= 1:
        return np.asarray([fn(trial) for trial in range(trials)], dtype=np.float64)
    with ThreadPoolExecutor(max_workers=workers) as executor:
        return np.asarray(list(executor.map(fn, range(trials))), dtype=np.float64)


def _max_centered_pair_count(n: int, count: int, seed: int, expected: float) -> float:
    samples = draw_residues(n, count, seed)
    counts = np.bincount(samples, minlength=n) + np.bincount((n - samples) % n, minlength=n)
    pairs = np.asarray(cyclic_self_convolution(counts.tolist(), n), dtype=np.float64)
    return float(np.max(np.abs(pairs[1:] - expected))) / 4


def deviation_tail_experiment(
    n: int,
    count: int,
    trials: int,
    seed: int,
    *,
    gamma: float = 0.6,
    cap_epsilon: Fraction | float | str = Fraction(1, 4),
    epsilon: float = 1.0,
    phi: Phi | str = Phi.LOG,
    x_values: Sequence[float] | None = None,
    points: int = DEFAULT_GRID_POINTS,
    workers: int | None = None,
) -> TailExperiment:
    """
    Empirical tail of max over r != 0 of |P(r) - E[P(r)]| / 4 against Azuma.

    Trial t draws its N residues with the sub-seed derive_seed(seed, t). The
    bound at x is azuma_bound(A, x) with A = 8 N^2 (M^2 + 1) / n and M the
    multiplicity cap for (gamma, cap_epsilon). The default x grid runs from 0
    to A / (2 (2M + 1)), where the exponential moment bound is valid.

    The deviation threshold x* = deviation_threshold(n, N, epsilon, phi) is
    merged into the default grid. ``parameters`` records x*, the empirical
    tail of the max at x*, the Azuma bound at x* for a single residue and the
    per-residue target 1 / (4n). Under that target a union over the residues
    keeps the tail of the max below 1/4.
    """
    if not 1 <= count < n:
        raise OutOfHypothesis(f"need 1 <= N < n, got N={count}, n={n}")
    if trials < 1:
        raise OutOfHypothesis(f"need at least one trial, got {trials}")
    if count > n ** gamma:
        logger.warning("N=%d exceeds n^gamma=%.3f for n=%d", count, n ** gamma, n)
    cap = choose_multiplicity_cap(gamma, as_fraction(cap_epsilon))
    variance = variance_proxy(n, count, cap)
    threshold = deviation_threshold(n, count, epsilon, phi)
    if x_values is None:
        x_values = np.linspace(0, variance / (2 * (2 * cap + 1)), points).tolist()
        x_values = sorted({*x_values, threshold})
    expected = float(expected_pair_count(n, count, 1))

    def trial(index: int) -> float:
        return _max_centered_pair_count(n, count, derive_seed(seed, index), expected)

    statistics = _map_trials(trial, trials, workers)
    grid = np.asarray(x_values, dtype=np.float64)
    experiment = TailExperiment(
        variance=variance,
        trials=trials,
        seed=seed,
        x_values=[float(x) for x in grid],
        empirical=_tail_frequencies(statistics, grid),
        bounds=[azuma_bound(variance, float(x)) for x in grid],
        parameters={
            "n": n,
            "N": count,
            "M": cap,
            "epsilon": epsilon,
            "phi": Phi(phi).value,
            "x_threshold": threshold,
            "empirical_at_threshold": float(np.mean(statistics >= threshold)),
            "bound_at_threshold": azuma_bound(variance, threshold),
            "per_residue_target": 1 / (4 * n),
        },
    )
    logger.info(
        "Tail experiment n=%d N=%d M=%d over %d trials: dominated=%s, tail %.4g at x*=%.6g",
        n, count, cap, trials, experiment.dominated(), experiment.parameters["empirical_at_threshold"], threshold,
    )
    return experiment


def simulate_bounded_martingales(
    steps: int = 100,
    step_size: float = 1.0,
    trials: int = 1000,
    seed: int = 0,
    *,
    x_values: Sequence[float] | None = None,
    points: int = DEFAULT_GRID_POINTS,
    workers: int | None = None,
) -> TailExperiment:
    """
    Empirical P(W_N >= x) for fair +-c random walks against exp(-x^2 / 2A), A = N c^2.

    The default x grid is ``points`` evenly spaced values from 0 to 4 sqrt(A).
    """
    if steps < 1 or trials < 1:
        raise OutOfHypothesis(f"need at least one step and one trial, got {steps} and {trials}")
    variance = steps * step_size ** 2
    if x_values is None:
        x_values = np.linspace(0, 4 * math.sqrt(variance), points).tolist()

    def trial(index: int) -> float:
        return step_size * float(np.sum(draw_signs(steps, derive_seed(seed, index))))

    statistics = _map_trials(trial, trials, workers)
    grid = np.asarray(x_values, dtype=np.float64)
    return TailExperiment(
        variance=variance,
        trials=trials,
        seed=seed,
        x_values=[float(x) for x in grid],
        empirical=_tail_frequencies(statistics, grid),
        bounds=[azuma_bound(variance, float(x)) for x in grid],
        parameters={"N": steps, "c": step_size},
    )
