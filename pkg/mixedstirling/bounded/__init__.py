"""Bounded Stirling - restricted, associated and band-limited set partition counts"""
from .size_band import SizeBand
from .bounded_stirling import (
    BoundedStirlingTable, band_table, stirling_in_band,
    stirling_le, stirling_ge, stirling_band,
    bell_in_band, bell_le, stirling_le_cumulative,
)

__all__ = [
    "SizeBand", "BoundedStirlingTable", "band_table", "stirling_in_band",
    "stirling_le", "stirling_ge", "stirling_band",
    "bell_in_band", "bell_le", "stirling_le_cumulative",
]
