"""
JSON and CSV encodings of trial reports.

JSON carries every field, with exact rationals as ``"num/den"`` strings. The
CSV row is the flat per-trial record used by sweeps, with decimals rendered to
a fixed number of significant digits.
"""
from __future__ import annotations

from typing import Any

from ....lib.rationals import format_decimal, format_fraction, parse_fraction
from ..grid_measures.exceptions import SerializationError
from .data import TrialReport

REPORT_CSV_HEADER = ("n", "N", "M", "max_deviation", "bound", "mult_max", "flat_ok", "mult_ok", "seed")

_INT_FIELDS = {
    "n": "n",
    "N": "pair_count",
    "M": "multiplicity_cap",
    "mult_max": "multiplicity_max",
    "attempts_used": "attempts_used",
    "seed": "seed",
    "attempt": "attempt",
    "trial_seed": "trial_seed",
}
_BOOL_FIELDS = {"flat_ok": "flat_ok", "mult_ok": "mult_ok"}
_FRACTION_FIELDS = {"max_deviation": "max_deviation", "origin_deviation": "origin_deviation"}


def report_to_json(report: TrialReport) -> dict[str, Any]:
    """Encode a report, keeping exact values as ``p/q`` strings."""
    payload: dict[str, Any] = {key: getattr(report, attr) for key, attr in _INT_FIELDS.items()}
    payload.update({key: format_fraction(getattr(report, attr)) for key, attr in _FRACTION_FIELDS.items()})
    payload["bound"] = report.flatness_bound
    payload.update({key: getattr(report, attr) for key, attr in _BOOL_FIELDS.items()})
    payload["passed"] = report.passed
    return payload


def report_from_json(payload: Any) -> TrialReport:
    """
    Rebuild a TrialReport from ``report_to_json`` output.
    """
    if not isinstance(payload, dict):
        raise SerializationError(f"expected an object, got {type(payload).__name__}")
    fields: dict[str, Any] = {}
    try:
        for key, attr in _INT_FIELDS.items():
            value = payload[key]
            if not isinstance(value, int) or isinstance(value, bool):
                raise SerializationError(f"'{key}' must be an integer")
            fields[attr] = value
        for key, attr in _BOOL_FIELDS.items():
            if not isinstance(payload[key], bool):
                raise SerializationError(f"'{key}' must be a boolean")
            fields[attr] = payload[key]
        for key, attr in _FRACTION_FIELDS.items():
            fields[attr] = parse_fraction(payload[key])
        fields["flatness_bound"] = float(payload["bound"])
    except KeyError as err:
        raise SerializationError(f"missing '{err.args[0]}' field") from err
    except (TypeError, ValueError, ZeroDivisionError) as err:
        raise SerializationError(str(err)) from err
    return TrialReport(**fields)


def report_to_row(report: TrialReport, precision: int) -> list[str]:
    """
    One CSV row in ``REPORT_CSV_HEADER`` order.
    """
    return [
        str(report.n),
        str(report.pair_count),
        str(report.multiplicity_cap),
        format_decimal(report.max_deviation, precision),
        format_decimal(report.flatness_bound, precision),
        str(report.multiplicity_max),
        str(report.flat_ok).lower(),
        str(report.mult_ok).lower(),
        str(report.seed),
    ]
