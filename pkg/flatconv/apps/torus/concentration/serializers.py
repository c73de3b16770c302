"""
CSV encoding of tail experiments.
"""
from __future__ import annotations

from ....lib.rationals import format_decimal
from .data import TailExperiment

TAIL_CSV_HEADER = ("x", "empirical", "bound", "stderr")


def tail_to_rows(experiment: TailExperiment, precision: int) -> list[list[str]]:
    """
    CSV rows (header excluded), one per x value.
    """
    return [[format_decimal(value, precision) for value in row] for row in experiment.rows()]
