"""
Tests for the concentration API
"""
import itertools
import math
from fractions import Fraction

import ddt  # type: ignore[import]
import numpy as np

from flatconv.apps.torus.concentration import api as concentration_api
from flatconv.apps.torus.concentration.data import Centering, MartingalePath, TailExperiment
from flatconv.apps.torus.concentration.exceptions import CapTripped, InvalidVariance, OutOfHypothesis
from flatconv.apps.torus.constructions.data import Phi
from flatconv.lib.test_utils import TestCase

# A cap nothing below can reach.
NO_CAP = 1000


@ddt.ddt
class TestBounds(TestCase):
    """
    The binomial and Azuma tail bounds.
    """

    def test_binomial_example(self) -> None:
        assert math.isclose(concentration_api.binomial_tail_bound(10, 0.05, 2), 0.25)
        assert concentration_api.binomial_tail_bound_exact(10, "0.05", 2) == Fraction(1, 4)
        exact = concentration_api.exact_binomial_tail(10, "0.05", 2)
        assert math.isclose(float(exact), 1 - 0.95 ** 10 - 10 * 0.05 * 0.95 ** 9)
        assert abs(float(exact) - 0.0861) < 1e-4

    @ddt.data(*itertools.product(range(1, 10), range(2, 13)))
    @ddt.unpack
    def test_binomial_bound_dominates(self, tenths: int, m: int) -> None:
        # N p = tenths / 10 for every N below.
        for pair_count in (1, 2, 10, 50):
            p = Fraction(tenths, 10 * pair_count)
            bound = concentration_api.binomial_tail_bound_exact(pair_count, p, m)
            assert concentration_api.exact_binomial_tail(pair_count, p, m) <= bound, (pair_count, p, m)

    @ddt.data((0, 0.1, 2), (10, 0.1, 2), (10, 0.05, 1), (10, 1.5, 2))
    @ddt.unpack
    def test_binomial_out_of_hypothesis(self, pair_count: int, p: float, m: int) -> None:
        with self.assertRaises(OutOfHypothesis):
            concentration_api.binomial_tail_bound(pair_count, p, m)

    def test_azuma(self) -> None:
        assert concentration_api.azuma_bound(1.0, 0) == 1.0
        assert math.isclose(concentration_api.azuma_bound(2.0, 2.0), math.exp(-1))
        with self.assertRaises(InvalidVariance):
            concentration_api.azuma_bound(0, 1.0)
        with self.assertRaises(OutOfHypothesis):
            concentration_api.azuma_bound(1.0, -1.0)

    def test_variance_proxy(self) -> None:
        assert math.isclose(concentration_api.variance_proxy(101, 16, 6), 75776 / 101)

    def test_deviation_threshold(self) -> None:
        expected = 15 * math.log(101) * math.sqrt(math.log(101)) / math.sqrt(101)
        assert math.isclose(concentration_api.deviation_threshold(101, 15, 1.0), expected)


@ddt.ddt
class TestPairCounts(TestCase):
    """
    Pair counts of symmetrized samples and their means.
    """

    def test_single_sample(self) -> None:
        assert concentration_api.pair_count(5, [1], 0) == 2
        assert concentration_api.expected_pair_count(5, 1, 0) == 2
        assert concentration_api.pair_count(5, [1], 2) == 1
        assert concentration_api.pair_count(5, [1], 1) == 0

    def test_total_pairs(self) -> None:
        samples = [1, 3, 3, 6]
        assert sum(concentration_api.pair_count(7, samples, r) for r in range(7)) == (2 * len(samples)) ** 2

    @ddt.data(*itertools.product((0, 1, 3), (1, 2, 3)))
    @ddt.unpack
    def test_expected_by_enumeration(self, r: int, count: int) -> None:
        n = 7
        outcomes = list(itertools.product(range(1, n), repeat=count))
        average = Fraction(sum(concentration_api.pair_count(n, samples, r) for samples in outcomes), len(outcomes))
        assert concentration_api.expected_pair_count(n, count, r) == average


@ddt.ddt
class TestMartingale(TestCase):
    """
    Increments of the pair-count martingale.
    """

    @ddt.data(*itertools.product(Centering, (0, 1, 2, 5)))
    @ddt.unpack
    def test_increments_have_zero_conditional_mean(self, centering: Centering, r: int) -> None:
        n = 7
        for length in range(3):
            for history in itertools.product(range(1, n), repeat=length):
                mean = concentration_api.conditional_increment_mean(
                    n, list(history), r, NO_CAP, centering, total_steps=3,
                )
                assert mean == 0

    @ddt.data(*itertools.product(Centering, (0, 2, 4)))
    @ddt.unpack
    def test_telescoping(self, centering: Centering, r: int) -> None:
        for samples in ([1, 2, 3], [5, 5, 2, 1], [3]):
            assert concentration_api.telescoping_identity_check(7, samples, r, NO_CAP, centering)

    @ddt.data(*Centering)
    def test_telescoping_on_random_samples(self, centering: Centering) -> None:
        rng = np.random.default_rng(2024)
        for case in range(1000):
            n = int(rng.choice([5, 7, 9, 11, 13, 21, 31]))
            samples = rng.integers(1, n, size=int(rng.integers(1, 9))).tolist()
            r = int(rng.integers(0, n))
            # Eight samples put at most 8 atoms on one point, so a cap of 9 never trips.
            assert concentration_api.telescoping_identity_check(n, samples, r, 9, centering), (case, n, samples, r)

    def test_compensator_by_hand(self) -> None:
        # s = 2/(n-1) and t(y) = 8/(n-1) away from y = +-r.
        assert concentration_api.pair_count_compensator(7, [2, 3], 1) == Fraction(2, 6) * 2 + Fraction(8, 6)

    def test_cap_trips(self) -> None:
        path = concentration_api.increment_sequence(7, [1, 1, 1, 2], 2, multiplicity_cap=2)
        assert path.tripped_at == 3
        assert path.cap_tripped
        assert path.increments[2:] == (0, 0)
        with self.assertRaises(CapTripped) as context:
            concentration_api.telescoping_identity_check(7, [1, 1, 1, 2], 2, multiplicity_cap=2)
        assert context.exception.step == 3

    def test_partial_sums(self) -> None:
        path = concentration_api.increment_sequence(7, [1, 2, 4], 3, NO_CAP, Centering.DOOB)
        sums = path.partial_sums
        assert len(sums) == 4
        assert sums[0] == 0
        assert sums[-1] == path.final
        assert not path.cap_tripped

    def test_path_validation(self) -> None:
        with self.assertRaises(ValueError):
            MartingalePath(increments=[Fraction(1), Fraction(1)], tripped_at=2)

    def test_invalid_samples(self) -> None:
        with self.assertRaises(OutOfHypothesis):
            concentration_api.increment_sequence(7, [0, 1], 1, NO_CAP)
        with self.assertRaises(OutOfHypothesis):
            concentration_api.increment_sequence(7, [1, 2], 1, NO_CAP, total_steps=1)


class TestTailExperiments(TestCase):
    """
    Empirical tails against the Azuma bound.
    """

    def test_deviation_tail(self) -> None:
        experiment = concentration_api.deviation_tail_experiment(101, 16, trials=200, seed=0)
        threshold = concentration_api.deviation_threshold(101, 16, 1.0, Phi.LOG)
        parameters = experiment.parameters
        assert {key: parameters[key] for key in ("n", "N", "M", "epsilon", "phi")} == {
            "n": 101, "N": 16, "M": 8, "epsilon": 1.0, "phi": "log",
        }
        assert parameters["x_threshold"] == threshold
        assert parameters["per_residue_target"] == 1 / 404
        assert experiment.variance == concentration_api.variance_proxy(101, 16, 8)
        # 17 grid points plus the threshold.
        assert len(experiment.x_values) == 18
        assert list(experiment.x_values) == sorted(experiment.x_values)
        at = experiment.x_values.index(threshold)
        assert parameters["empirical_at_threshold"] == experiment.empirical[at]
        assert parameters["bound_at_threshold"] == experiment.bounds[at]
        assert experiment.x_values[0] == 0
        assert math.isclose(experiment.x_values[-1], experiment.variance / 34)
        assert experiment.empirical[0] == 1.0
        assert experiment.dominated()

    def test_deviation_tail_reproducible(self) -> None:
        first = concentration_api.deviation_tail_experiment(31, 7, trials=50, seed=3, workers=1)
        second = concentration_api.deviation_tail_experiment(31, 7, trials=50, seed=3, workers=4)
        assert first == second

    def test_deviation_tail_threshold_options(self) -> None:
        experiment = concentration_api.deviation_tail_experiment(
            31, 7, trials=40, seed=5, epsilon=0.5, phi="sqrtlog", x_values=[0.0, 1.0],
        )
        # A given grid is kept as is.
        assert experiment.x_values == (0.0, 1.0)
        assert experiment.parameters["phi"] == "sqrtlog"
        assert math.isclose(experiment.parameters["x_threshold"], 0.5 * 7 * math.log(31) / math.sqrt(31))
        assert 0 <= experiment.parameters["empirical_at_threshold"] <= experiment.empirical[1]

    def test_deviation_tail_invalid(self) -> None:
        with self.assertRaises(OutOfHypothesis):
            concentration_api.deviation_tail_experiment(31, 31, trials=5, seed=0)
        with self.assertRaises(OutOfHypothesis):
            concentration_api.deviation_tail_experiment(31, 5, trials=0, seed=0)

    def test_random_walks(self) -> None:
        experiment = concentration_api.simulate_bounded_martingales(steps=100, step_size=0.5, trials=2000, seed=1)
        assert experiment.variance == 25.0
        assert experiment.x_values[-1] == 20.0
        assert experiment.parameters == {"N": 100, "c": 0.5}
        assert experiment.dominated()
        frequencies = list(experiment.empirical)
        assert frequencies == sorted(frequencies, reverse=True)

    def test_random_walks_custom_grid(self) -> None:
        experiment = concentration_api.simulate_bounded_martingales(steps=10, trials=20, x_values=[0, 1, 2])
        assert experiment.x_values == (0.0, 1.0, 2.0)
        assert experiment.bounds[0] == 1.0

    def test_stderr_halves_with_four_times_the_trials(self) -> None:
        fields = {"variance": 1.0, "seed": 0, "x_values": [0.5], "empirical": [0.1], "bounds": [0.3]}
        small = TailExperiment(trials=100, **fields)
        large = TailExperiment(trials=400, **fields)
        assert math.isclose(large.stderr[0], small.stderr[0] / 2)
        assert math.isclose(small.stderr[0], math.sqrt(0.3 * 0.7 / 100))

    def test_dominated_margin(self) -> None:
        experiment = TailExperiment(
            variance=1.0, trials=100, seed=0, x_values=[1.0], empirical=[0.4], bounds=[0.3],
        )
        # stderr is sqrt(0.21 / 100) ~ 0.0458
        assert experiment.dominated(k=3)
        assert not experiment.dominated(k=1)

    def test_experiment_validation(self) -> None:
        with self.assertRaises(ValueError):
            TailExperiment(variance=1.0, trials=1, seed=0, x_values=[0, 1], empirical=[1.0], bounds=[1.0])
        with self.assertRaises(ValueError):
            TailExperiment(variance=1.0, trials=1, seed=0, x_values=[0], empirical=[1.5], bounds=[1.0])

    def test_rows(self) -> None:
        experiment = TailExperiment(
            variance=1.0, trials=4, seed=0, x_values=[0.0], empirical=[1.0], bounds=[1.0],
        )
        assert concentration_api.tail_to_rows(experiment, 6) == [["0", "1", "1", "0"]]
