"""Helpers for Python ints used as bit sets over element indices."""
from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np


def from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << int(i)
    return mask


def to_array(mask: int) -> np.ndarray:
    """Indices of the set bits, ascending, as an int64 array."""
    if mask == 0:
        return np.zeros(0, dtype=np.int64)
    raw = mask.to_bytes((mask.bit_length() + 7) // 8, "little")
    unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return np.flatnonzero(unpacked)


def from_bool(flags: np.ndarray) -> int:
    if not flags.any():
        return 0
    packed = np.packbits(flags.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def count(mask: int) -> int:
    return mask.bit_count()


def above(i: int) -> int:
    """Mask clearing bits 0..i, to be ANDed against a candidate set."""
    return ~((1 << (i + 1)) - 1)
