"""
Exceptions for metrics on sets and measures
"""
from __future__ import annotations

from django.utils.translation import gettext as _


class MetricError(Exception):
    """
    Base exception for metrics
    """

    def __init__(self, message: str = ""):
        super().__init__()
        self.message = message

    def __str__(self):
        return str(self.message)

    def __repr__(self):
        return f"{self.__class__.__name__}({str(self)})"


class EmptySet(MetricError):
    """
    Exception used when a set with no points is given
    """

    def __init__(self):
        super().__init__()
        self.message = _("Distances are only defined between non-empty sets")


class AsymmetricSet(MetricError):
    """
    Exception used when a set is not closed under negation
    """

    def __init__(self, point):
        super().__init__()
        self.point = point
        self.message = _("The set contains {point} but not its negation").format(point=point)


class InvalidCover(MetricError):
    """
    Exception used when a cover or its parameters are malformed
    """

    def __init__(self, message: str):
        super().__init__()
        self.message = _("Invalid cover: {message}").format(message=message)
