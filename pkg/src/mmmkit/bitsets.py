"""Bit-mask helpers for colour subsets.

Colour subsets are packed into ints: bit i is set when colour i is in the
subset.  All iteration orders are deterministic.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def mask_of(elements: Iterable[int]) -> int:
    """Pack an iterable of nonnegative ints into a bit mask."""
    mask = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e} cannot be packed into a mask")
        mask |= 1 << e
    return mask


def elements_of(mask: int) -> tuple[int, ...]:
    """Unpack a bit mask into its elements in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask`` (including 0 and mask itself).

    Order is descending numeric, which is deterministic and makes the
    complement pairing below reproducible.
    """
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def k_subset_masks(n: int, k: int) -> Iterator[int]:
    """Yield all k-element subsets of [n] as masks in ascending numeric order."""
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    top = 1 << n
    while mask < top:
        yield mask
        # Gosper's hack: next larger int with the same popcount.
        low = mask & -mask
        ripple = mask + low
        mask = ripple | (((mask ^ ripple) >> 2) // low)


def spread(mask: int, ground: tuple[int, ...]) -> int:
    """Map an abstract mask over positions 0..len(ground)-1 onto actual elements.

    Bit i of ``mask`` becomes bit ``ground[i]`` of the result.
    """
    out = 0
    m = mask
    while m:
        low = m & -m
        out |= 1 << ground[low.bit_length() - 1]
        m ^= low
    return out
