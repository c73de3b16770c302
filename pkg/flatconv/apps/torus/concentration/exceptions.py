"""
Exceptions for concentration bounds and martingales
"""
from __future__ import annotations

from django.utils.translation import gettext as _


class ConcentrationError(Exception):
    """
    Base exception for concentration
    """

    def __init__(self, message: str = ""):
        super().__init__()
        self.message = message

    def __str__(self):
        return str(self.message)

    def __repr__(self):
        return f"{self.__class__.__name__}({str(self)})"


class OutOfHypothesis(ConcentrationError):
    """
    Exception used when a bound is asked for outside the range where it holds
    """

    def __init__(self, message: str):
        super().__init__()
        self.message = _("Outside the hypotheses of the bound: {message}").format(message=message)


class InvalidVariance(ConcentrationError):
    """
    Exception used when the variance proxy A is not positive
    """

    def __init__(self, variance: float):
        super().__init__()
        self.variance = variance
        self.message = _("The variance proxy must be positive, got {variance}").format(variance=variance)


class CapTripped(ConcentrationError):
    """
    Exception used when the multiplicity cap stopped a martingale path
    """

    def __init__(self, step: int):
        super().__init__()
        self.step = step
        self.message = _(
            "The multiplicity cap was reached before step {step}; increments are 0 from there on"
        ).format(step=step)
