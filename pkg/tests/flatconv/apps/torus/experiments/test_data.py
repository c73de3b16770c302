"""
Tests for the run configuration
"""
from fractions import Fraction
from pathlib import Path

from flatconv.apps.torus.constructions.data import Phi
from flatconv.apps.torus.experiments.data import Command, RunConfig
from flatconv.apps.torus.experiments.formats import ReportFormat
from flatconv.apps.torus.grid_measures.exceptions import InvalidGrid
from flatconv.lib.test_utils import TestCase


class TestRunConfig(TestCase):
    """
    RunConfig converts and validates its fields.
    """

    def test_conversions(self) -> None:
        cfg = RunConfig(
            command="sweep", n_values=["31", 101], phi="loglog", cap_epsilon="1/8",
            output="runs", output_format=".csv", inputs=["a.json"], width="1/100", seed=4, trials=3,
        )
        assert cfg.command is Command.SWEEP
        assert cfg.n_values == (31, 101)
        assert cfg.phi is Phi.LOGLOG
        assert cfg.cap_epsilon == Fraction(1, 8)
        assert cfg.output == Path("runs")
        assert cfg.output_format is ReportFormat.CSV
        assert cfg.inputs == (Path("a.json"),)
        assert cfg.width == Fraction(1, 100)
        assert cfg.seeds == [4, 5, 6]

    def test_single_order(self) -> None:
        assert RunConfig(command="construct", n_values=[101]).n == 101
        with self.assertRaises(ValueError):
            _ = RunConfig(command="sweep", n_values=[31, 101]).n
        with self.assertRaises(ValueError):
            _ = RunConfig(command="tails").n

    def test_even_order(self) -> None:
        with self.assertRaises(InvalidGrid):
            RunConfig(command="construct", n_values=[100])

    def test_unknown_command(self) -> None:
        with self.assertRaises(ValueError):
            RunConfig(command="plot")

    def test_construction_params(self) -> None:
        cfg = RunConfig(command="construct", n_values=[101], gamma=0.5, epsilon=2.0, seed=9, max_attempts=3)
        params = cfg.construction_params()
        assert (params.gamma, params.epsilon, params.seed, params.max_attempts) == (0.5, 2.0, 9, 3)
        assert cfg.construction_params(seed=11).seed == 11
