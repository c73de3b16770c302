"""
Tests for the trial report encodings
"""
import json
from fractions import Fraction

import ddt  # type: ignore[import]

from flatconv.apps.torus.constructions import api as constructions_api
from flatconv.apps.torus.constructions.data import ConstructionParams
from flatconv.apps.torus.grid_measures import api as grid_measures_api
from flatconv.apps.torus.grid_measures.data import GridSpec
from flatconv.apps.torus.grid_measures.exceptions import SerializationError
from flatconv.lib.test_utils import TestCase


@ddt.ddt
class TestReportSerializers(TestCase):
    """
    Reports go to JSON exactly and to CSV rows with fixed precision.
    """

    def setUp(self) -> None:
        super().setUp()
        m = grid_measures_api.from_points(GridSpec(5), [1])
        self.report = constructions_api.check_trial(m, ConstructionParams(gamma=0.6, epsilon=1.0, seed=9))

    def test_json(self) -> None:
        payload = constructions_api.report_to_json(self.report)
        assert payload["max_deviation"] == "1/5"
        assert payload["origin_deviation"] == "3/10"
        assert payload["N"] == 1
        assert payload["M"] == 8
        assert payload["seed"] == 9
        assert payload["passed"] is True
        restored = constructions_api.report_from_json(json.loads(json.dumps(payload)))
        assert restored == self.report
        assert restored.max_deviation == Fraction(1, 5)

    def test_row(self) -> None:
        row = constructions_api.report_to_row(self.report, 6)
        assert len(row) == len(constructions_api.REPORT_CSV_HEADER)
        assert row[:4] == ["5", "1", "8", "0.2"]
        assert row[5:] == ["1", "true", "true", "9"]

    @ddt.data("n", "bound", "flat_ok", "max_deviation")
    def test_missing_field(self, name: str) -> None:
        payload = constructions_api.report_to_json(self.report)
        del payload[name]
        with self.assertRaises(SerializationError):
            constructions_api.report_from_json(payload)

    @ddt.data(("n", "5"), ("flat_ok", 1), ("max_deviation", "1/0"), ("bound", "wide"), ("N", True))
    @ddt.unpack
    def test_bad_field(self, name: str, value) -> None:
        payload = constructions_api.report_to_json(self.report)
        payload[name] = value
        with self.assertRaises(SerializationError):
            constructions_api.report_from_json(payload)

    def test_not_an_object(self) -> None:
        with self.assertRaises(SerializationError):
            constructions_api.report_from_json(["n", 5])
