"""
Tests for exact number formatting
"""
from fractions import Fraction

import ddt  # type: ignore[import]

from flatconv.lib.rationals import as_fraction, format_decimal, format_fraction, parse_fraction
from flatconv.lib.test_utils import TestCase


@ddt.ddt
class TestRationals(TestCase):
    """
    Formatting helpers used by the JSON and CSV artifacts.
    """

    @ddt.data(
        (Fraction(3, 6), "1/2"),
        (2, "2/1"),
        (Fraction(-7, 4), "-7/4"),
        (Fraction(0), "0/1"),
    )
    @ddt.unpack
    def test_format_fraction(self, value, expected: str) -> None:
        assert format_fraction(value) == expected
        assert parse_fraction(expected) == Fraction(value)

    def test_parse_bare_integer(self) -> None:
        assert parse_fraction("7") == 7

    def test_parse_garbage(self) -> None:
        with self.assertRaises(ValueError):
            parse_fraction("one/two")
        with self.assertRaises(ZeroDivisionError):
            parse_fraction("1/0")

    @ddt.data(
        (Fraction(1, 3), 5, "0.33333"),
        (0.25, 17, "0.25"),
        (1234567, 3, "1.23e+06"),
    )
    @ddt.unpack
    def test_format_decimal(self, value, precision: int, expected: str) -> None:
        assert format_decimal(value, precision) == expected

    @ddt.data(
        (0.01, Fraction(1, 100)),
        ("1/4", Fraction(1, 4)),
        (" 0.6 ", Fraction(3, 5)),
        (3, Fraction(3)),
        (Fraction(2, 7), Fraction(2, 7)),
    )
    @ddt.unpack
    def test_as_fraction(self, value, expected: Fraction) -> None:
        assert as_fraction(value) == expected
