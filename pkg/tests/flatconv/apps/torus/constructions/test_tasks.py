"""
Test the construction celery tasks
"""
from flatconv.apps.torus.constructions import tasks as constructions_tasks
from flatconv.apps.torus.grid_measures import api as grid_measures_api
from flatconv.lib.test_utils import TestCase


class TestConstructionTasks(TestCase):
    """
    Tasks run eagerly here and return JSON-ready results.
    """

    def test_construct_task(self) -> None:
        result = constructions_tasks.construct_task.apply(
            args=({"gamma": 0.6, "epsilon": 1000.0, "seed": 2, "max_attempts": 3}, 101),
        ).get()
        assert result["ok"] is True
        assert result["report"]["passed"] is True
        measure = grid_measures_api.counts_from_json(result["measure"])
        assert measure.pair_count == 15

    def test_construct_task_exhausted(self) -> None:
        result = constructions_tasks.construct_task({"gamma": 0.6, "epsilon": 1e-9, "max_attempts": 2}, 5)
        assert result["ok"] is False
        assert result["report"]["attempts_used"] == 2
        assert result["report"]["flat_ok"] is False

    def test_run_sweep_task(self) -> None:
        result = constructions_tasks.run_sweep_task({"gamma": 0.6, "epsilon": 1000.0}, [101, 31], [0, 1])
        assert [row["n"] for row in result] == [31, 101]
        assert all(row["trials"] == 2 and row["success_rate"] == 1.0 for row in result)
