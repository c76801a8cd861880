"""Exact Core - binomials, multinomials, Stirling, Bell and r-Stirling numbers"""
from .arithmetic import factorial, binomial, multinomial
from .tables import TriangleTable, StirlingTable
from .stirling import (
    stirling2, stirling_row, stirling2_explicit, stirling2_howard, bell, r_stirling,
)

__all__ = [
    "factorial", "binomial", "multinomial",
    "TriangleTable", "StirlingTable",
    "stirling2", "stirling_row", "stirling2_explicit", "stirling2_howard",
    "bell", "r_stirling",
]
