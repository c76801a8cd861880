"""Mixed Stirling - partitions into cells carrying repeated labels"""
from .cells import CellSpec, EmptyPolicy, MixedAlgorithm, MixedParams
from .mixed_stirling import (
    ALGORITHMS, weak_compositions,
    mixed_count, mixed_count_convolution, mixed_count_collapsed, mixed_count_relaxed,
    s_mixed, s_mixed_three_case, s_mixed_all, s_value,
    mixed_bell, r_stirling_via_mixed,
)

__all__ = [
    "CellSpec", "EmptyPolicy", "MixedAlgorithm", "MixedParams", "ALGORITHMS", "weak_compositions",
    "mixed_count", "mixed_count_convolution", "mixed_count_collapsed", "mixed_count_relaxed",
    "s_mixed", "s_mixed_three_case", "s_mixed_all", "s_value",
    "mixed_bell", "r_stirling_via_mixed",
]
