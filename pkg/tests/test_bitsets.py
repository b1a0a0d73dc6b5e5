from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mmmkit.bitsets import elements_of, k_subset_masks, mask_of, spread, submasks


def test_mask_of_elements_round_trip():
    assert mask_of([0, 2, 5]) == 0b100101
    assert elements_of(0b100101) == (0, 2, 5)
    assert mask_of([]) == 0
    assert elements_of(0) == ()


@given(st.integers(min_value=0, max_value=2**16 - 1))
def test_round_trip_random_masks(mask):
    assert mask_of(elements_of(mask)) == mask


def test_submasks_cover_powerset():
    subs = list(submasks(0b1011))
    assert len(subs) == 8
    assert set(subs) == {s for s in range(16) if s & ~0b1011 == 0}
    assert subs[0] == 0b1011  # descending, ends at the empty mask
    assert subs[-1] == 0


def test_submasks_of_zero():
    assert list(submasks(0)) == [0]


@pytest.mark.parametrize("n,k", [(4, 0), (4, 2), (5, 3), (6, 1)])
def test_k_subset_masks_counts(n, k):
    masks = list(k_subset_masks(n, k))
    assert len(masks) == comb(n, k)
    assert all(m.bit_count() == k for m in masks)
    assert masks == sorted(masks)


def test_spread_maps_abstract_bits_to_ground_elements():
    # abstract {0,2} over ground (1, 4, 6) lands on {1, 6}
    assert spread(0b101, (1, 4, 6)) == (1 << 1) | (1 << 6)
    assert spread(0, (1, 4, 6)) == 0
