"""
Experiments API

One ``run_*`` function per command. Each takes a RunConfig and returns a
RunResult holding the exit status and the rendered artifacts; nothing is
written to disk until ``write_artifacts``. Given the same RunConfig, a run
always renders byte-identical artifacts whatever the number of worker threads.

Exit statuses: 0 on success, 1 when a construction is exhausted or a verified
measure fails a check. Usage errors (status 2) are raised by the commands.
"""
from __future__ import annotations

import json
from collections.abc import Callable
from fractions import Fraction
from logging import getLogger
from pathlib import Path
from typing import Any

from ....lib.config import get_csv_precision
from ....lib.rationals import format_decimal, format_fraction
from ..concentration import api as concentration_api
from ..constructions import api as constructions_api
from ..constructions.data import ConstructionParams, SuccessSummary
from ..densities import api as densities_api
from ..grid_measures import api as grid_measures_api
from ..grid_measures.data import SymmetricCounts
from ..grid_measures.exceptions import SerializationError
from ..metrics import api as metrics_api
from .data import Command, RunConfig, RunResult
from .formats import CSVWriter, Document, JSONWriter, Table, get_writer

# The public API that will be re-exported by flatconv.api.torus is listed in
# the __all__ entries below. Internal helper functions that are private to this
# module should start with an underscore.
__all__ = [
    "RunConfig",
    "RunResult",
    "run",
    "run_construct",
    "run_sweep",
    "run_tails",
    "run_verify",
    "run_metrics",
    "load_measure",
    "write_artifacts",
]


logger = getLogger(__name__)

SUMMARY_CSV_HEADER = (
    "n", "trials", "success_rate", "flat_rate", "mult_rate", "median_deviation", "median_ratio",
)


def _params_to_json(params: ConstructionParams) -> dict[str, Any]:
    return {
        "gamma": params.gamma,
        "epsilon": params.epsilon,
        "phi": str(params.phi),
        "seed": params.seed,
        "max_attempts": params.max_attempts,
        "cap_epsilon": format_fraction(params.cap_epsilon),
    }


def _render(cfg: RunConfig, document: Document) -> dict[str, str]:
    writer = get_writer(cfg.output_format)
    return {writer.filename(document): writer.render(document)}


def load_measure(path: Path) -> SymmetricCounts:
    """
    Read a measure written by the construct command.
    """
    try:
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as err:
        raise SerializationError(f"{path} is not valid JSON: {err}") from err
    return grid_measures_api.counts_from_json(payload)


def write_artifacts(result: RunResult, output: Path) -> list[Path]:
    """
    Write every artifact under ``output`` (created if needed), in name order.
    """
    output = Path(output)
    output.mkdir(parents=True, exist_ok=True)
    written = []
    for name in sorted(result.artifacts):
        path = output / name
        with path.open("w", encoding="utf-8", newline="") as file:
            file.write(result.artifacts[name])
        written.append(path)
    return written


def run_construct(cfg: RunConfig, *, workers: int | None = None) -> RunResult:
    """
    Construct one measure; write its report, the measure and the g*g nodes.

    On exhaustion the best attempt is written all the same and the status is 1.
    """
    params = cfg.construction_params()
    try:
        measure, report = constructions_api.construct(params, cfg.n, workers=workers)
        status = 0
    except constructions_api.ExhaustedAttempts as err:
        logger.info(str(err))
        measure, report, status = err.best_measure, err.best_report, 1
    density = densities_api.autoconvolve_density(densities_api.build_step_density(measure))
    precision = get_csv_precision()

    report_document = Document(
        name="report",
        payload={
            "ok": status == 0,
            "params": _params_to_json(params),
            "report": constructions_api.report_to_json(report),
        },
    )
    density_document = Document(
        name="density",
        payload=densities_api.density_to_json(density),
        tables=[Table(densities_api.DENSITY_CSV_HEADER, densities_api.density_to_rows(density, precision))],
    )
    artifacts = {
        "report.json": JSONWriter.render(report_document),
        "measure.json": JSONWriter.render(Document("measure", grid_measures_api.counts_to_json(measure))),
        "density.csv": CSVWriter.render(density_document),
    }
    verdict = "accepted" if status == 0 else "no attempt passed"
    summary = (
        f"n={report.n} N={report.pair_count} M={report.multiplicity_cap}: {verdict} after "
        f"{report.attempts_used} attempt(s), deviation {float(report.max_deviation):.6g} "
        f"(bound {report.flatness_bound:.6g}), multiplicity {report.multiplicity_max}"
    )
    return RunResult(status=status, artifacts=artifacts, summary=summary)


def _summary_row(summary: SuccessSummary, precision: int) -> list[str]:
    return [
        str(summary.n),
        str(summary.trials),
        format_decimal(summary.success_rate, precision),
        format_decimal(summary.flat_rate, precision),
        format_decimal(summary.mult_rate, precision),
        format_decimal(summary.median_deviation, precision),
        format_decimal(summary.median_ratio, precision),
    ]


def _summary_to_json(summary: SuccessSummary) -> dict[str, Any]:
    return {
        "n": summary.n,
        "N": summary.pair_count,
        "trials": summary.trials,
        "success_rate": summary.success_rate,
        "flat_rate": summary.flat_rate,
        "mult_rate": summary.mult_rate,
        "median_deviation": summary.median_deviation,
        "median_ratio": summary.median_ratio,
    }


def run_sweep(cfg: RunConfig, *, workers: int | None = None) -> RunResult:
    """
    Single-attempt success statistics over every (n, seed) pair.

    Rows come n ascending, then seed ascending, followed by one summary row per
    n and the located threshold n0.
    """
    if not cfg.n_values:
        raise ValueError("sweep needs at least one grid order")
    params = cfg.construction_params()
    summaries = constructions_api.sweep(params, cfg.n_values, cfg.seeds, workers=workers)
    threshold_n = constructions_api.locate_threshold_n(summaries, cfg.threshold)
    precision = get_csv_precision()

    reports = [report for summary in summaries for report in summary.reports]
    document = Document(
        name="sweep",
        payload={
            "params": _params_to_json(params),
            "reports": [constructions_api.report_to_json(report) for report in reports],
            "summaries": [_summary_to_json(summary) for summary in summaries],
            "n0": threshold_n,
        },
        tables=[
            Table(
                constructions_api.REPORT_CSV_HEADER,
                [constructions_api.report_to_row(report, precision) for report in reports],
            ),
            Table(SUMMARY_CSV_HEADER, [_summary_row(summary, precision) for summary in summaries]),
            Table((), [["n0", "none" if threshold_n is None else str(threshold_n)]], gap=False),
        ],
    )
    summary = f"{len(reports)} trials over {len(summaries)} grid orders, n0={threshold_n}"
    return RunResult(status=0, artifacts=_render(cfg, document), summary=summary)


def run_tails(cfg: RunConfig, *, workers: int | None = None) -> RunResult:
    """
    Tail experiment for the pair-count deviation, or for bounded random walks
    when ``walk_steps`` is set.
    """
    if cfg.walk_steps:
        experiment = concentration_api.simulate_bounded_martingales(
            cfg.walk_steps, cfg.step_size, cfg.trials, cfg.seed, points=cfg.points, workers=workers,
        )
    else:
        n = cfg.n
        count = cfg.pair_count or constructions_api.pair_count_for(n, cfg.gamma)
        experiment = concentration_api.deviation_tail_experiment(
            n, count, cfg.trials, cfg.seed,
            gamma=cfg.gamma, cap_epsilon=cfg.cap_epsilon, epsilon=cfg.epsilon, phi=cfg.phi,
            points=cfg.points, workers=workers,
        )
    precision = get_csv_precision()
    document = Document(
        name="tails",
        payload={
            "parameters": experiment.parameters,
            "variance": experiment.variance,
            "trials": experiment.trials,
            "seed": experiment.seed,
            "rows": [dict(zip(concentration_api.TAIL_CSV_HEADER, row)) for row in experiment.rows()],
            "dominated": experiment.dominated(),
        },
        tables=[Table(concentration_api.TAIL_CSV_HEADER, concentration_api.tail_to_rows(experiment, precision))],
    )
    summary = f"{experiment.trials} trials, A={experiment.variance:.6g}, dominated={experiment.dominated()}"
    parameters = experiment.parameters
    if "x_threshold" in parameters:
        summary += f", tail {parameters['empirical_at_threshold']:.4g} at x*={parameters['x_threshold']:.6g}"
    return RunResult(status=0, artifacts=_render(cfg, document), summary=summary)


def run_verify(cfg: RunConfig) -> RunResult:
    """
    Re-check a saved measure from scratch.

    Status 0 when the measure passes both acceptance checks and every identity
    between the exact, FFT and density paths holds.
    """
    measure = load_measure(cfg.inputs[0])
    params = cfg.construction_params()
    report = constructions_api.check_trial(measure, params)
    fast_report = constructions_api.recheck(measure, params)
    g = densities_api.build_step_density(measure)
    gg = densities_api.autoconvolve_density(g)
    exact = grid_measures_api.autoconvolve(measure)
    top_value, cap_value = densities_api.density_cap(measure, report.multiplicity_cap)
    n = measure.n
    checks = {
        "flat_ok": report.flat_ok,
        "mult_ok": report.mult_ok,
        "fast_path_agrees": fast_report.max_deviation == report.max_deviation,
        "flatness_identity": (
            densities_api.sup_deviation_from_one(gg) == n * grid_measures_api.max_flatness_deviation(exact)
            and densities_api.sup_deviation_from_one(gg, exclude_origin=True) == n * report.max_deviation
        ),
        "mass_conservation": densities_api.integral(g) == 1 and densities_api.integral(gg) == 1,
        "fourier_identity": grid_measures_api.autoconvolution_fourier_check(measure),
        "density_cap": top_value <= cap_value,
    }
    status = 0 if all(checks.values()) else 1
    document = Document(
        name="verify",
        payload={
            "ok": status == 0,
            "params": _params_to_json(params),
            "report": constructions_api.report_to_json(report),
            "checks": checks,
        },
        tables=[Table(("check", "value"), [[name, str(value).lower()] for name, value in checks.items()])],
    )
    failed = [name for name, value in checks.items() if not value]
    summary = "all checks passed" if not failed else f"failed checks: {', '.join(failed)}"
    return RunResult(status=status, artifacts=_render(cfg, document), summary=summary)


def run_metrics(cfg: RunConfig) -> RunResult:
    """
    Distances between two saved measures, with covering and dimension figures
    for the support of the first.
    """
    first, second = (load_measure(path) for path in cfg.inputs[:2])
    breakdown = metrics_api.density_distance_breakdown(first, second)
    support = metrics_api.set_from_counts(first)
    width = cfg.width if cfg.width is not None else Fraction(1, first.n ** 2)
    cover, passes = metrics_api.covering_check(support, cfg.alpha, cfg.m_index, width)
    covering_sum = cover.covering_sum(cfg.alpha + 1 / cfg.m_index)
    dimension = metrics_api.box_dimension_estimate(support, first.n)
    precision = get_csv_precision()

    covering = {
        "alpha": cfg.alpha,
        "m_index": cfg.m_index,
        "width": format_fraction(width),
        "arcs": len(cover.arcs),
        "sum": covering_sum,
        "passes": passes,
    }
    document = Document(
        name="metrics",
        payload={
            "breakdown": metrics_api.breakdown_to_json(breakdown),
            "covering": covering,
            "box_dimension": dimension,
        },
        tables=[
            Table(
                ("term", "value"),
                [
                    ["hausdorff", format_decimal(breakdown.hausdorff, precision)],
                    ["fourier", format_decimal(breakdown.fourier, precision)],
                    ["density", format_decimal(breakdown.density, precision)],
                    ["measure_distance", format_decimal(breakdown.measure_distance, precision)],
                    ["total", format_decimal(breakdown.total, precision)],
                    ["covering_sum", format_decimal(covering_sum, precision)],
                    ["covering_passes", str(passes).lower()],
                    ["box_dimension", format_decimal(dimension, precision)],
                ],
            ),
        ],
    )
    summary = f"density distance {breakdown.total:.6g}, covering sum {covering_sum:.6g}, dimension {dimension:.4f}"
    return RunResult(status=0, artifacts=_render(cfg, document), summary=summary)


_RUNNERS: dict[Command, Callable[..., RunResult]] = {
    Command.CONSTRUCT: run_construct,
    Command.SWEEP: run_sweep,
    Command.TAILS: run_tails,
    Command.VERIFY: run_verify,
    Command.METRICS: run_metrics,
}


def run(cfg: RunConfig) -> RunResult:
    """
    Dispatch to the runner for ``cfg.command``.
    """
    return _RUNNERS[cfg.command](cfg)
