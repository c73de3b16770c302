"""
Construction celery tasks
"""
from __future__ import annotations

from typing import Any

from celery import shared_task  # type: ignore[import]

from ..grid_measures.serializers import counts_to_json
from . import api as constructions_api
from .data import ConstructionParams
from .exceptions import ExhaustedAttempts


@shared_task
def construct_task(params: dict[str, Any], n: int) -> dict[str, Any]:
    """
    Runs construct on a celery task

    Returns JSON-ready ``{"ok", "report", "measure"}``; on exhaustion the
    best attempt is returned with ``ok`` false.
    """
    try:
        measure, report = constructions_api.construct(ConstructionParams(**params), n)
        ok = True
    except ExhaustedAttempts as err:
        measure, report = err.best_measure, err.best_report
        ok = False
    return {
        "ok": ok,
        "report": constructions_api.report_to_json(report),
        "measure": counts_to_json(measure),
    }


@shared_task
def run_sweep_task(params: dict[str, Any], n_values: list[int], seeds: list[int]) -> list[dict[str, Any]]:
    """
    Runs a success-rate sweep on a celery task
    """
    summaries = constructions_api.sweep(ConstructionParams(**params), n_values, seeds)
    return [
        {
            "n": summary.n,
            "N": summary.pair_count,
            "trials": summary.trials,
            "success_rate": summary.success_rate,
            "flat_rate": summary.flat_rate,
            "mult_rate": summary.mult_rate,
            "median_deviation": summary.median_deviation,
            "median_ratio": summary.median_ratio,
        }
        for summary in summaries
    ]
