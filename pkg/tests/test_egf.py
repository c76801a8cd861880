"""
Tests for truncated exact power series and the generating functions of each family.
Run: pytest tests/test_egf.py -v
"""
from fractions import Fraction

import pytest

from mixedstirling.bounded import SizeBand, stirling_in_band
from mixedstirling.egf import (
    Series, count_from_series, egf_exp_tail, egf_mixed, egf_stirling_band,
    series_band_class, series_block_class, series_compose, series_derivative,
    series_dump, series_exp, series_monomial, series_mul, series_one, series_pow,
    series_zero,
)
from mixedstirling.exact_core import bell, factorial, stirling2
from mixedstirling.mixed import CellSpec, MixedParams, mixed_count, mixed_count_relaxed, s_value


# ── Series Arithmetic ────────────────────────────────────────────


class TestSeries:

    def test_coefficients_are_fractions(self):
        s = Series.of([1, 2, 3])
        assert s.order == 2
        assert all(isinstance(c, Fraction) for c in s.coeffs)

    def test_empty_series_rejected(self):
        with pytest.raises(ValueError):
            Series(())

    def test_index_outside_order(self):
        with pytest.raises(IndexError):
            series_one(3)[4]

    def test_mul_truncates_to_smaller_order(self):
        a = Series.of([1, 1, 1, 1])
        b = Series.of([1, 1])
        assert series_mul(a, b).coeffs == (1, 2)

    def test_operators(self):
        x = series_monomial(1, 4)
        s = (series_one(4) + x) ** 2
        assert s.coeffs == (1, 2, 1, 0, 0)
        assert (s - s).coeffs == series_zero(4).coeffs
        assert (2 * x).coeffs == (0, 2, 0, 0, 0)

    def test_pow_zero_is_one(self):
        assert series_pow(Series.of([0, 1, 1]), 0).coeffs == (1, 0, 0)

    def test_exp_of_x_composed(self):
        # e^(x) composed with x is e^x
        assert series_compose(series_exp(6), series_monomial(1, 6)).coeffs == series_exp(6).coeffs

    def test_compose_needs_zero_constant(self):
        with pytest.raises(ValueError):
            series_compose(series_exp(4), series_exp(4))

    def test_bell_numbers_from_exp_exp(self):
        # e^(e^x - 1)
        s = series_compose(series_exp(10), egf_exp_tail(1, 10))
        assert [count_from_series(s, n) for n in range(11)] == [bell(n) for n in range(11)]

    def test_derivative(self):
        assert series_derivative(series_exp(5)).coeffs == series_exp(4).coeffs
        assert series_derivative(series_one(0)).coeffs == (0,)

    def test_count_from_series_non_integral(self):
        with pytest.raises(ArithmeticError):
            count_from_series(Series.of([0, Fraction(1, 3)]), 1)

    def test_count_from_series_out_of_range(self):
        with pytest.raises(ValueError):
            count_from_series(series_one(2), 3)

    def test_dump(self):
        assert series_dump(Series.of([1, Fraction(1, 2), 0])) == "0\t1/1\n1\t1/2\n2\t0/1"


# ── Family EGFs ──────────────────────────────────────────────────


class TestFamilyEgfs:

    def test_block_class(self):
        alpha = series_block_class([1, 2], 4)
        assert alpha.coeffs == (0, 1, Fraction(1, 2), 0, 0)

    def test_block_class_rejects_empty_or_zero_size(self):
        with pytest.raises(ValueError):
            series_block_class([], 4)
        with pytest.raises(ValueError):
            series_block_class([0, 1], 4)

    def test_band_class_beyond_order_is_zero(self):
        assert series_band_class(SizeBand.at_least(6), 4).coeffs == series_zero(4).coeffs

    @pytest.mark.parametrize("band", [
        SizeBand.unbounded(), SizeBand.at_most(2), SizeBand.at_least(2), SizeBand.between(2, 3),
    ])
    def test_stirling_band(self, band):
        for k in range(5):
            s = egf_stirling_band(k, band, 10)
            for n in range(11):
                assert count_from_series(s, n) == stirling_in_band(n, k, band)

    def test_plain_stirling(self):
        s = egf_stirling_band(3, SizeBand.unbounded(), 9)
        assert [count_from_series(s, n) for n in range(10)] == [stirling2(n, 3) for n in range(10)]

    def test_mixed_params(self):
        s = egf_mixed(MixedParams(n=0, k=3, r=2), order=8)
        assert count_from_series(s, 6) == 780
        for n in range(9):
            assert count_from_series(s, n) == s_value(n, 3, 2)

    def test_mixed_params_band(self):
        band = SizeBand.at_most(3)
        s = egf_mixed(MixedParams(n=0, k=2, r=3, band=band), order=9)
        for n in range(10):
            assert count_from_series(s, n) == s_value(n, 2, 3, band)

    def test_mixed_band_argument_overrides_params(self):
        band = SizeBand.at_least(2)
        s = egf_mixed(MixedParams(n=0, k=2, r=2), band=band, order=8)
        for n in range(9):
            assert count_from_series(s, n) == s_value(n, 2, 2, band)

    def test_cell_spec_strict(self):
        spec = CellSpec.strict((2, 1, 1))
        s = egf_mixed(spec, order=9)
        for n in range(10):
            assert count_from_series(s, n) == mixed_count(n, spec)

    def test_cell_spec_relaxed(self):
        band = SizeBand.at_most(2)
        spec = CellSpec.relaxed((2, 1), labels=(1,))
        s = egf_mixed(spec, band, 8)
        assert count_from_series(s, 3) == 9
        for n in range(9):
            assert count_from_series(s, n) == mixed_count_relaxed(n, spec, band)

    def test_coefficients_integral(self):
        s = egf_mixed(MixedParams(n=0, k=4, r=3, band=SizeBand.between(2, 3)), order=12)
        for n in range(13):
            assert (s[n] * factorial(n)).denominator == 1
