"""
JSON encoding of grid measures.

Measures travel as plain dictionaries that ``json`` can dump directly:

* SymmetricCounts: ``{"n": 5, "N": 1, "counts": [0, 1, 0, 0, 1]}``
* AtomVector: ``{"n": 5, "num": [1, 0, 1, 1, 0], "den": [2, 1, 4, 4, 1]}``
  (each weight reduced to lowest terms)

Only integers are involved, so a dump/load cycle is bit-exact.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from .data import AtomVector, GridSpec, SymmetricCounts
from .exceptions import GridMeasureError, SerializationError


def _require(payload: Any, *fields: str) -> None:
    if not isinstance(payload, dict):
        raise SerializationError(f"expected an object, got {type(payload).__name__}")
    for name in fields:
        if name not in payload:
            raise SerializationError(f"missing '{name}' field")


def _int_list(payload: dict, name: str) -> list[int]:
    values = payload[name]
    if not isinstance(values, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in values):
        raise SerializationError(f"'{name}' must be a list of integers")
    return values


def counts_to_json(m: SymmetricCounts) -> dict[str, Any]:
    """Encode counts as ``{"n", "N", "counts"}``."""
    return {"n": m.n, "N": m.pair_count, "counts": list(m.counts)}


def counts_from_json(payload: Any) -> SymmetricCounts:
    """
    Rebuild SymmetricCounts, re-checking every invariant on the way in.
    """
    _require(payload, "n", "N", "counts")
    if not isinstance(payload["N"], int) or isinstance(payload["N"], bool):
        raise SerializationError("'N' must be an integer")
    try:
        return SymmetricCounts(
            grid=GridSpec(payload["n"]),
            counts=_int_list(payload, "counts"),
            pair_count=payload["N"],
        )
    except GridMeasureError as err:
        if isinstance(err, SerializationError):
            raise
        raise SerializationError(str(err)) from err


def atoms_to_json(v: AtomVector) -> dict[str, Any]:
    """Encode an atom vector as ``num``/``den`` arrays of the reduced weights."""
    weights = v.weights
    return {
        "n": v.grid.n,
        "num": [weight.numerator for weight in weights],
        "den": [weight.denominator for weight in weights],
    }


def atoms_from_json(payload: Any) -> AtomVector:
    """Decode the output of ``atoms_to_json``."""
    _require(payload, "n", "num", "den")
    numerators = _int_list(payload, "num")
    denominators = _int_list(payload, "den")
    if len(numerators) != len(denominators):
        raise SerializationError("'num' and 'den' have different lengths")
    if any(den <= 0 for den in denominators):
        raise SerializationError("denominators must be positive")
    try:
        return AtomVector.from_weights(
            GridSpec(payload["n"]),
            [Fraction(num, den) for num, den in zip(numerators, denominators)],
        )
    except GridMeasureError as err:
        raise SerializationError(str(err)) from err
