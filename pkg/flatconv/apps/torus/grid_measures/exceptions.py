"""
Exceptions for grid measures
"""
from __future__ import annotations

from django.utils.translation import gettext as _


class GridMeasureError(Exception):
    """
    Base exception for grid measures
    """

    def __init__(self, message: str = ""):
        super().__init__()
        self.message = message

    def __str__(self):
        return str(self.message)

    def __repr__(self):
        return f"{self.__class__.__name__}({str(self)})"


class InvalidGrid(GridMeasureError):
    """
    Exception used when the grid order is not an odd integer >= 3
    """

    def __init__(self, n: object):
        super().__init__()
        self.n = n
        self.message = _("Invalid grid order {n}: n must be odd and at least 3").format(n=n)


class InvalidAtom(GridMeasureError):
    """
    Exception used when an atom is placed at 0 or outside the grid
    """

    def __init__(self, residue: int, n: int):
        super().__init__()
        self.residue = residue
        self.message = _("Invalid atom {residue}: atoms must be residues in 1..{last}").format(
            residue=residue, last=n - 1,
        )


class EmptyMeasure(GridMeasureError):
    """
    Exception used when a measure would have no atoms at all
    """

    def __init__(self):
        super().__init__()
        self.message = _("A probability measure needs at least one atom")


class InvalidMeasure(GridMeasureError):
    """
    Exception used when counts or weights break the measure invariants
    """

    def __init__(self, message: str):
        super().__init__()
        self.message = _("Invalid measure: {message}").format(message=message)


class RoundingUnsafe(GridMeasureError):
    """
    Exception used when a float convolution can't be rounded back safely
    """

    def __init__(self, residue: int, distance: float):
        super().__init__()
        self.residue = residue
        self.distance = distance
        self.message = _(
            "Float convolution at residue {residue} is {distance:.3g} away from an integer"
        ).format(residue=residue, distance=distance)


class SerializationError(GridMeasureError):
    """
    Exception used when a JSON payload doesn't describe a valid object
    """

    def __init__(self, message: str):
        super().__init__()
        self.message = _("Invalid payload: {message}").format(message=message)
