"""
JSON and CSV encodings of densities.

JSON: ``{"kind": "step" | "linear", "n": 5, "num": [...], "den": [...]}`` with
each value reduced to lowest terms, so a dump/load cycle is bit-exact.

CSV: a ``position,value`` header and one row per node (or cell center), as
decimals with a fixed number of significant digits.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from ....lib.rationals import format_decimal
from ..grid_measures.data import GridSpec
from ..grid_measures.exceptions import GridMeasureError, SerializationError
from .data import PiecewiseLinearPeriodic, StepDensity
from .exceptions import DensityError

DENSITY_CSV_HEADER = ("position", "value")

_KINDS = {"step": StepDensity, "linear": PiecewiseLinearPeriodic}


def density_to_json(f: StepDensity | PiecewiseLinearPeriodic) -> dict[str, Any]:
    """Encode node values as parallel numerator and denominator lists."""
    values = f.values
    return {
        "kind": "step" if isinstance(f, StepDensity) else "linear",
        "n": f.grid.n,
        "num": [value.numerator for value in values],
        "den": [value.denominator for value in values],
    }


def density_from_json(payload: Any) -> StepDensity | PiecewiseLinearPeriodic:
    """
    Rebuild a density, re-checking its invariants on the way in.
    """
    if not isinstance(payload, dict):
        raise SerializationError(f"expected an object, got {type(payload).__name__}")
    for name in ("kind", "n", "num", "den"):
        if name not in payload:
            raise SerializationError(f"missing '{name}' field")
    if payload["kind"] not in _KINDS:
        raise SerializationError(f"unknown density kind {payload['kind']!r}")
    numerators, denominators = payload["num"], payload["den"]
    if not isinstance(numerators, list) or not isinstance(denominators, list) or len(numerators) != len(denominators):
        raise SerializationError("'num' and 'den' must be lists of the same length")
    try:
        values = [Fraction(num, den) for num, den in zip(numerators, denominators)]
        grid = GridSpec(payload["n"])
        plp = PiecewiseLinearPeriodic.from_values(grid, values)
        if payload["kind"] == "linear":
            return plp
        return StepDensity(grid=grid, numerators=plp.numerators, denominator=plp.denominator)
    except (TypeError, ValueError, ZeroDivisionError, GridMeasureError, DensityError) as err:
        raise SerializationError(str(err)) from err


def density_to_rows(f: StepDensity | PiecewiseLinearPeriodic, precision: int) -> list[list[str]]:
    """
    CSV rows (header excluded) of node positions k/n and values.
    """
    n = f.grid.n
    return [
        [format_decimal(Fraction(k, n), precision), format_decimal(value, precision)]
        for k, value in enumerate(f.values)
    ]
