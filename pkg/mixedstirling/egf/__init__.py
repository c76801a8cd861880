"""EGF Engine - truncated exponential generating functions over exact rationals"""
from .series import (
    Series, series_zero, series_one, series_monomial, series_exp,
    series_add, series_scale, series_mul, series_pow, series_compose, series_derivative,
    count_from_series, series_dump,
)
from .families import (
    series_block_class, series_band_class, egf_exp_tail, egf_stirling_band, egf_mixed,
)

__all__ = [
    "Series", "series_zero", "series_one", "series_monomial", "series_exp",
    "series_add", "series_scale", "series_mul", "series_pow", "series_compose",
    "series_derivative", "count_from_series", "series_dump",
    "series_block_class", "series_band_class", "egf_exp_tail", "egf_stirling_band", "egf_mixed",
]
