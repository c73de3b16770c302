"""
Exceptions for densities
"""
from __future__ import annotations

from django.utils.translation import gettext as _


class DensityError(Exception):
    """
    Base exception for densities
    """

    def __init__(self, message: str = ""):
        super().__init__()
        self.message = message

    def __str__(self):
        return str(self.message)

    def __repr__(self):
        return f"{self.__class__.__name__}({str(self)})"


class InvalidDensity(DensityError):
    """
    Exception used when node or cell values break the density invariants
    """

    def __init__(self, message: str):
        super().__init__()
        self.message = _("Invalid density: {message}").format(message=message)
