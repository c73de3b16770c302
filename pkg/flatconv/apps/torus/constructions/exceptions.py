"""
Exceptions for randomized constructions
"""
from __future__ import annotations

import typing

from django.utils.translation import gettext as _

if typing.TYPE_CHECKING:
    from ..grid_measures.data import SymmetricCounts
    from .data import TrialReport


class ConstructionError(Exception):
    """
    Base exception for constructions
    """

    def __init__(self, message: str = ""):
        super().__init__()
        self.message = message

    def __str__(self):
        return str(self.message)

    def __repr__(self):
        return f"{self.__class__.__name__}({str(self)})"


class InvalidParameters(ConstructionError):
    """
    Exception used when construction parameters are out of range
    """

    def __init__(self, message: str):
        super().__init__()
        self.message = _("Invalid construction parameters: {message}").format(message=message)


class TooManyPoints(ConstructionError):
    """
    Exception used when more points are requested than the grid can take
    """

    def __init__(self, pair_count: int, n: int):
        super().__init__()
        self.message = _("Cannot draw N={pair_count} points on a grid of order {n}: N must be below n").format(
            pair_count=pair_count, n=n,
        )


class ExhaustedAttempts(ConstructionError):
    """
    Exception used when no attempt passed both checks

    The best attempt seen so far is kept on the exception.
    """

    def __init__(self, best_report: TrialReport, best_measure: SymmetricCounts):
        super().__init__()
        self.best_report = best_report
        self.best_measure = best_measure
        self.message = _(
            "No attempt passed after {attempts} tries (n={n}); best max deviation {deviation} "
            "against bound {bound:.6g}, multiplicity {mult} against cap {cap}"
        ).format(
            attempts=best_report.attempts_used,
            n=best_report.n,
            deviation=best_report.max_deviation,
            bound=best_report.flatness_bound,
            mult=best_report.multiplicity_max,
            cap=best_report.multiplicity_cap,
        )
