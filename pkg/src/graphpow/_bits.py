"""Helpers for adjacency rows held as Python integers (bit v set = neighbour v)."""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

# beyond this width, unpacking through numpy beats the lowest-bit loop
_NUMPY_THRESHOLD = 1024


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of set bits of ``x`` in ascending order."""
    if x.bit_length() <= _NUMPY_THRESHOLD:
        while x:
            low = x & -x
            yield low.bit_length() - 1
            x ^= low
    else:
        yield from bits_array(x).tolist()


def bits_array(x: int) -> np.ndarray:
    """Set-bit indices of ``x`` as a sorted int64 array."""
    if x == 0:
        return np.zeros(0, dtype=np.int64)
    raw = x.to_bytes((x.bit_length() + 7) // 8, "little")
    unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    return np.flatnonzero(unpacked)


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m
