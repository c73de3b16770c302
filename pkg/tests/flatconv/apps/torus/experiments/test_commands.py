"""
Tests for the experiment management commands
"""
import csv
import json
import math
import tempfile
from io import StringIO
from pathlib import Path

import ddt  # type: ignore[import]
from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import override_settings

from flatconv.apps.torus.concentration.api import TAIL_CSV_HEADER
from flatconv.apps.torus.constructions.api import REPORT_CSV_HEADER
from flatconv.apps.torus.experiments.api import SUMMARY_CSV_HEADER
from flatconv.lib.test_utils import TestCase


class CommandTestCase(TestCase):
    """
    Runs commands into a scratch directory.
    """

    def setUp(self) -> None:
        super().setUp()
        self._tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self._tmp.cleanup)
        self.tmp = Path(self._tmp.name)

    def run_command(self, name: str, *args: str, output: str = "out") -> Path:
        target = self.tmp / output
        call_command(name, *args, "--output", str(target), stdout=StringIO())
        return target

    def construct(self, seed: int, output: str) -> Path:
        target = self.run_command("construct", "--n", "101", "--seed", str(seed), "--epsilon", "1000", output=output)
        return target / "measure.json"


@ddt.ddt
class TestConstructCommand(CommandTestCase):
    """
    construct writes the report, the measure and the g*g nodes.
    """

    def test_artifacts(self) -> None:
        target = self.run_command("construct", "--n", "101", "--seed", "1")
        assert sorted(path.name for path in target.iterdir()) == ["density.csv", "measure.json", "report.json"]
        report = json.loads((target / "report.json").read_text())
        assert report["ok"] is True
        assert report["params"]["cap_epsilon"] == "1/4"
        assert report["report"]["n"] == 101
        assert report["report"]["N"] == 15
        measure = json.loads((target / "measure.json").read_text())
        assert sum(measure["counts"]) == 30
        rows = list(csv.reader((target / "density.csv").read_text().splitlines()))
        assert rows[0] == ["position", "value"]
        assert len(rows) == 102

    @ddt.data(1, 4)
    def test_byte_identical(self, threads: int) -> None:
        reference = self.run_command("construct", "--n", "101", "--seed", "5", output="reference")
        with override_settings(FLATCONV={"THREADS": threads}):
            other = self.run_command("construct", "--n", "101", "--seed", "5", output=f"threads-{threads}")
        for name in ("report.json", "measure.json", "density.csv"):
            assert (reference / name).read_bytes() == (other / name).read_bytes()

    def test_even_order(self) -> None:
        with self.assertRaisesRegex(CommandError, "n must be odd"):
            self.run_command("construct", "--n", "100")

    def test_invalid_gamma(self) -> None:
        with self.assertRaises(CommandError) as context:
            self.run_command("construct", "--n", "101", "--gamma", "1.5")
        assert context.exception.returncode == 2

    def test_exhausted(self) -> None:
        with self.assertRaises(CommandError) as context:
            self.run_command("construct", "--n", "5", "--epsilon", "1e-9", "--max-attempts", "3")
        assert context.exception.returncode == 1
        report = json.loads((self.tmp / "out" / "report.json").read_text())
        assert report["ok"] is False
        assert report["report"]["attempts_used"] == 3


class TestSweepCommand(CommandTestCase):
    """
    sweep writes one row per (n, seed), the summaries and n0.
    """

    def test_csv(self) -> None:
        target = self.run_command("sweep", "--n-values", "101", "31", "--trials", "3", "--epsilon", "1000")
        lines = (target / "sweep.csv").read_text().splitlines()
        assert lines[0] == ",".join(REPORT_CSV_HEADER)
        reports = [line.split(",") for line in lines[1:7]]
        assert [(row[0], row[8]) for row in reports] == [
            ("31", "0"), ("31", "1"), ("31", "2"), ("101", "0"), ("101", "1"), ("101", "2"),
        ]
        assert lines[7] == ""
        assert lines[8] == ",".join(SUMMARY_CSV_HEADER)
        assert [line.split(",")[:3] for line in lines[9:11]] == [["31", "3", "1"], ["101", "3", "1"]]
        assert lines[11] == "n0,31"
        assert len(lines) == 12

    def test_json(self) -> None:
        target = self.run_command("sweep", "--n-values", "31", "--trials", "2", "--epsilon", "1000", "--format", "json")
        payload = json.loads((target / "sweep.json").read_text())
        assert len(payload["reports"]) == 2
        assert payload["summaries"][0]["success_rate"] == 1.0
        assert payload["n0"] == 31

    def test_even_order(self) -> None:
        with self.assertRaisesRegex(CommandError, "n must be odd"):
            self.run_command("sweep", "--n-values", "31", "32")


class TestVerifyCommand(CommandTestCase):
    """
    verify re-checks a saved measure.
    """

    def test_passes(self) -> None:
        measure = self.construct(seed=2, output="built")
        target = self.run_command("verify", str(measure), "--epsilon", "1000")
        payload = json.loads((target / "verify.json").read_text())
        assert payload["ok"] is True
        assert all(payload["checks"].values())

    def test_fails_flatness(self) -> None:
        measure = self.construct(seed=2, output="built")
        with self.assertRaises(CommandError) as context:
            self.run_command("verify", str(measure), "--epsilon", "1e-9", "--format", "csv")
        assert context.exception.returncode == 1
        rows = dict(csv.reader((self.tmp / "out" / "verify.csv").read_text().splitlines()))
        assert rows["flat_ok"] == "false"
        assert rows["flatness_identity"] == "true"

    def test_unreadable_measure(self) -> None:
        broken = self.tmp / "broken.json"
        broken.write_text("{not json")
        with self.assertRaises(CommandError) as context:
            self.run_command("verify", str(broken))
        assert context.exception.returncode == 2
        with self.assertRaises(CommandError) as context:
            self.run_command("verify", str(self.tmp / "missing.json"))
        assert context.exception.returncode == 2

    def test_invalid_measure(self) -> None:
        broken = self.tmp / "asymmetric.json"
        broken.write_text(json.dumps({"n": 5, "N": 1, "counts": [0, 2, 0, 0, 0]}))
        with self.assertRaises(CommandError) as context:
            self.run_command("verify", str(broken))
        assert context.exception.returncode == 2


class TestMetricsCommand(CommandTestCase):
    """
    metrics compares two saved measures.
    """

    def test_json(self) -> None:
        first = self.construct(seed=1, output="first")
        second = self.construct(seed=2, output="second")
        target = self.run_command("metrics", str(first), str(second))
        payload = json.loads((target / "metrics.json").read_text())
        assert payload["breakdown"]["total"] > 0
        assert payload["covering"]["width"] == "1/10201"
        assert payload["covering"]["passes"] is True
        assert 0 < payload["box_dimension"] < 1

    def test_same_measure(self) -> None:
        first = self.construct(seed=1, output="first")
        target = self.run_command("metrics", str(first), str(first), "--width", "1/10", "--format", "csv")
        rows = dict(csv.reader((target / "metrics.csv").read_text().splitlines()))
        assert rows["total"] == "0"
        assert rows["hausdorff"] == "0"

    def test_invalid_alpha(self) -> None:
        first = self.construct(seed=1, output="first")
        with self.assertRaises(CommandError) as context:
            self.run_command("metrics", str(first), str(first), "--alpha", "0.2")
        assert context.exception.returncode == 2


class TestTailsCommand(CommandTestCase):
    """
    tails writes one row per x value.
    """

    def test_deviation_tails(self) -> None:
        target = self.run_command("tails", "--n", "31", "--trials", "20", "--points", "5")
        rows = list(csv.reader((target / "tails.csv").read_text().splitlines()))
        assert tuple(rows[0]) == TAIL_CSV_HEADER
        # Five grid points plus the deviation threshold.
        assert len(rows) == 7
        assert rows[1][:3] == ["0", "1", "1"]

    def test_threshold_options(self) -> None:
        target = self.run_command(
            "tails", "--n", "31", "--trials", "20", "--points", "5",
            "--epsilon", "0.5", "--phi", "sqrtlog", "--format", "json",
        )
        payload = json.loads((target / "tails.json").read_text())
        parameters = payload["parameters"]
        assert parameters["N"] == 7
        assert parameters["epsilon"] == 0.5
        assert parameters["phi"] == "sqrtlog"
        assert math.isclose(parameters["x_threshold"], 0.5 * 7 * math.log(31) / math.sqrt(31))
        assert parameters["per_residue_target"] == 1 / 124
        assert parameters["x_threshold"] in [row["x"] for row in payload["rows"]]
        assert len(payload["rows"]) == 6

    def test_random_walks(self) -> None:
        target = self.run_command("tails", "--walk-steps", "10", "--trials", "20", "--format", "json")
        payload = json.loads((target / "tails.json").read_text())
        assert payload["parameters"] == {"N": 10, "c": 1.0}
        assert payload["variance"] == 10.0
        assert len(payload["rows"]) == 17

    def test_byte_identical(self) -> None:
        first = self.run_command("tails", "--n", "31", "--trials", "30", output="first")
        second = self.run_command("tails", "--n", "31", "--trials", "30", output="second")
        assert (first / "tails.csv").read_bytes() == (second / "tails.csv").read_bytes()
