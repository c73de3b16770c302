"""
Seed mixing and residue draws.

Every random quantity in flatconv comes from the raw 64-bit output of a PCG64
bit generator. We deliberately avoid ``numpy.random.Generator`` methods here:
numpy guarantees that a bit generator's raw stream is stable across releases
and platforms, but not the algorithms that turn raw bits into integers. The
reduction below is simple enough to be reproduced in any language:

* The sub-seed for attempt (or trial) ``i`` of a run seeded with ``seed`` is
  ``seed XOR splitmix64(i)``, truncated to 64 bits.
* A residue uniform on ``1..n-1`` is ``1 + raw % (n - 1)``, where raws at or
  above ``2**64 - (2**64 % (n - 1))`` are rejected so the reduction carries no
  modulo bias.
"""
from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1

_GOLDEN_GAMMA = 0x9E3779B97F4A7C15
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB


def splitmix64(value: int) -> int:
    """
    Return the SplitMix64 output for ``value`` (the 64-bit mixing permutation).
    """
    z = (value + _GOLDEN_GAMMA) & MASK64
    z = ((z ^ (z >> 30)) * _MIX_1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX_2) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed: int, index: int) -> int:
    """
    Derive the sub-seed for attempt/trial ``index`` of a run seeded with ``seed``.
    """
    if index < 0:
        raise ValueError(f"index must be non-negative, got {index}")
    return (seed ^ splitmix64(index)) & MASK64


def raw_stream(seed: int, size: int) -> np.ndarray:
    """
    Return ``size`` raw 64-bit words from a PCG64 generator seeded with ``seed``.
    """
    return np.asarray(np.random.PCG64(seed & MASK64).random_raw(size), dtype=np.uint64)


def draw_residues(n: int, size: int, seed: int) -> np.ndarray:
    """
    Draw ``size`` independent residues uniform on ``1..n-1``.

    The result is an int64 array. Identical ``(n, size, seed)`` always give the
    same array.
    """
    if n < 2:
        raise ValueError(f"need at least one non-zero residue, got n={n}")
    modulus = n - 1
    limit = (1 << 64) - ((1 << 64) % modulus)
    bit_generator = np.random.PCG64(seed & MASK64)
    residues = np.empty(size, dtype=np.int64)
    filled = 0
    while filled < size:
        raw = np.asarray(bit_generator.random_raw(size - filled), dtype=np.uint64)
        if limit <= MASK64:
            raw = raw[raw < np.uint64(limit)]
        taken = raw.size
        residues[filled:filled + taken] = (raw % np.uint64(modulus)).astype(np.int64) + 1
        filled += taken
    return residues


def draw_signs(size: int, seed: int) -> np.ndarray:
    """
    Draw ``size`` independent fair signs (+1/-1) from the low bit of each raw word.
    """
    raw = raw_stream(seed, size)
    return np.where((raw & np.uint64(1)) == np.uint64(1), 1, -1).astype(np.int64)
