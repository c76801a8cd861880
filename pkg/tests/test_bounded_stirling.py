"""
Tests for size bands and restricted / associated / band-limited Stirling numbers.
Run: pytest tests/test_bounded_stirling.py -v
"""
import pytest
from hypothesis import given, strategies as st

from mixedstirling.bounded import (
    SizeBand, bell_in_band, bell_le, stirling_band, stirling_ge,
    stirling_in_band, stirling_le, stirling_le_cumulative,
)
from mixedstirling.exact_core import binomial, stirling2


# ── Size Bands ───────────────────────────────────────────────────


class TestSizeBand:

    @pytest.mark.parametrize("text,lo,hi", [
        ("unbounded", 1, None),
        ("<=3", 1, 3),
        (">=2", 2, None),
        ("2..4", 2, 4),
        ("2..inf", 2, None),
        ("  <= 5 ", 1, 5),
    ])
    def test_parse(self, text, lo, hi):
        band = SizeBand.parse(text)
        assert (band.lo, band.hi) == (lo, hi)

    def test_parse_rejects_garbage(self):
        with pytest.raises(ValueError):
            SizeBand.parse("three")

    def test_inverted_band_rejected(self):
        with pytest.raises(ValueError):
            SizeBand.between(4, 2)

    def test_zero_lower_bound_rejected(self):
        with pytest.raises(ValueError):
            SizeBand(lo=0)

    def test_labels_round_trip_through_parse(self):
        for text in ("unbounded", "<=2", ">=3", "2..3"):
            assert SizeBand.parse(text).label == text

    def test_restricted_and_associated(self):
        assert SizeBand.at_most(3).is_restricted
        assert not SizeBand.at_most(3).is_associated
        assert SizeBand.at_least(2).is_associated
        assert SizeBand.unbounded().is_restricted and SizeBand.unbounded().is_associated

    def test_supports(self):
        band = SizeBand.between(2, 3)
        assert band.supports(6, 2)
        assert not band.supports(7, 2)
        assert not band.supports(3, 2)

    def test_bands_are_hashable_and_equal_by_value(self):
        assert SizeBand.parse("<=2") == SizeBand.at_most(2)
        assert len({SizeBand.at_most(2), SizeBand.parse("<=2")}) == 1


# ── Restricted ───────────────────────────────────────────────────


class TestRestricted:

    def test_known_values(self):
        assert stirling_le(4, 2, 2) == 3
        assert stirling_le(5, 2, 2) == 0
        assert stirling_le(5, 3, 2) == 15
        assert stirling_le(6, 3, 3) == 75

    def test_large_bound_is_plain_stirling(self):
        for n in range(9):
            for k in range(n + 1):
                assert stirling_le(n, k, n + 1) == stirling2(n, k)

    def test_bell_le_two_counts_involutions(self):
        assert [bell_le(n, 2) for n in range(7)] == [1, 1, 2, 4, 10, 26, 76]

    def test_cumulative(self):
        assert stirling_le_cumulative(5, 3, 2) == stirling_le(5, 3, 2)
        assert stirling_le_cumulative(4, 4, 3) == sum(stirling_le(4, i, 3) for i in range(1, 5))

    def test_cumulative_needs_positive_k(self):
        with pytest.raises(ValueError):
            stirling_le_cumulative(4, 0, 2)

    @given(st.integers(min_value=1, max_value=12), st.integers(min_value=1, max_value=6))
    def test_recurrence_by_block_of_n(self, n, m):
        # the block of n holds i further elements, 0 <= i <= m - 1
        for k in range(1, n + 1):
            expected = sum(
                binomial(n - 1, i) * stirling_le(n - 1 - i, k - 1, m)
                for i in range(min(m - 1, n - 1) + 1)
            )
            assert stirling_le(n, k, m) == expected


# ── Associated ───────────────────────────────────────────────────


class TestAssociated:

    def test_known_values(self):
        assert stirling_ge(4, 2, 2) == 3
        assert stirling_ge(5, 2, 2) == 10
        assert stirling_ge(6, 2, 2) == 25
        assert stirling_ge(6, 3, 2) == 15
        assert stirling_ge(6, 2, 3) == 10

    def test_lower_bound_one_is_plain_stirling(self):
        for n in range(9):
            for k in range(n + 1):
                assert stirling_ge(n, k, 1) == stirling2(n, k)

    def test_infeasible_is_zero(self):
        assert stirling_ge(5, 3, 2) == 0
        assert stirling_ge(3, 1, 4) == 0


# ── Bands ────────────────────────────────────────────────────────


class TestBand:

    def test_between(self):
        assert stirling_band(6, 2, 2, 3) == 10
        assert stirling_band(5, 2, 2, 3) == 10

    def test_negative_arguments_give_zero(self):
        assert stirling_in_band(-1, 2) == 0
        assert stirling_in_band(3, -1) == 0

    def test_empty_partition(self):
        for band in (SizeBand.unbounded(), SizeBand.at_least(3), SizeBand.at_most(2)):
            assert stirling_in_band(0, 0, band) == 1
            assert stirling_in_band(3, 0, band) == 0

    def test_bell_in_band(self):
        assert bell_in_band(6, SizeBand.at_least(2)) == 41

    def test_bell_in_band_negative(self):
        with pytest.raises(ValueError):
            bell_in_band(-1)
