"""Word-parallel helpers over Python int bitmasks."""
from __future__ import annotations

from typing import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest_bit(mask: int) -> int:
    """Index of the lowest set bit; ``mask`` must be non-zero."""
    return (mask & -mask).bit_length() - 1


def masks_of_size(n: int, size: int) -> Iterator[int]:
    """All ``n``-bit masks with ``size`` set bits, in increasing numeric order (Gosper's hack)."""
    if size < 0 or size > n:
        return
    if size == 0:
        yield 0
        return
    mask = (1 << size) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple
