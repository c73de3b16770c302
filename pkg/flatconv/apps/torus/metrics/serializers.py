"""
JSON encodings of covers and metric breakdowns.
"""
from __future__ import annotations

from typing import Any

from ....lib.rationals import format_fraction
from .data import IntervalCover, MetricBreakdown


def cover_to_json(cover: IntervalCover) -> dict[str, Any]:
    """Encode a cover as a list of arcs."""
    return {
        "arcs": [
            {"center": format_fraction(arc.center), "width": format_fraction(arc.width)}
            for arc in cover.arcs
        ],
    }


def breakdown_to_json(breakdown: MetricBreakdown) -> dict[str, Any]:
    """Encode each term of a breakdown."""
    return {
        "hausdorff": format_fraction(breakdown.hausdorff),
        "fourier": breakdown.fourier,
        "density": format_fraction(breakdown.density),
        "measure_distance": breakdown.measure_distance,
        "total": breakdown.total,
    }
