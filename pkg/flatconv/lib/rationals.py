"""
Exact number formatting.

JSON artifacts carry rationals as ``"num/den"`` strings (or parallel integer
arrays for vectors) so that they round-trip bit for bit. CSV artifacts are for
plotting and carry decimals with a fixed number of significant digits, which
keeps them byte-identical from one run to the next.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

DEFAULT_PRECISION = 17


def format_fraction(value: Rational | int) -> str:
    """
    Render an exact rational as ``"num/den"`` (always with a denominator).
    """
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    """
    Parse the output of ``format_fraction`` (a bare integer is accepted too).
    """
    numerator, _, denominator = str(text).partition("/")
    return Fraction(int(numerator), int(denominator or 1))


def format_decimal(value: float | Rational, precision: int = DEFAULT_PRECISION) -> str:
    """
    Render a number as a decimal with ``precision`` significant digits.
    """
    return format(float(value), f".{precision}g")


def as_fraction(value: float | str | Rational | int) -> Fraction:
    """
    Exact rational for ``value``; floats and strings are read as their decimal text.

    ``as_fraction(0.01) == Fraction(1, 100)``, where ``Fraction(0.01)`` would
    give the binary expansion of the float.
    """
    if isinstance(value, (float, str)):
        return Fraction(str(value).strip())
    return Fraction(value)
