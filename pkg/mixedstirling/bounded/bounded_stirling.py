"""
Stirling numbers of the second kind with block sizes confined to a SizeBand.

Restricted numbers bound sizes from above ({n brace k}_{<=m}), associated numbers
from below ({n brace k}_{>=l}); a band does both. Every variant is one
BoundedStirlingTable, built by following element n: its block takes i companions
out of the other n-1 elements, with i + 1 inside the band.
"""

from typing import Optional

from mixedstirling.bounded.size_band import SizeBand
from mixedstirling.cache import memo_registry
from mixedstirling.exact_core.arithmetic import binomial
from mixedstirling.exact_core.tables import Row, TriangleTable


class BoundedStirlingTable(TriangleTable):
    """Triangle of partitions of [n] into k blocks with every size in band."""

    def __init__(self, band: SizeBand):
        super().__init__(base_n=0)
        self.band = band

    def _build_row(self, n: int) -> Row:
        if n == 0:
            return (1,)
        lo, hi = self.band.lo, self.band.hi
        top = n if hi is None else min(hi, n)
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            if not self.band.supports(n, k):
                continue
            total = 0
            for size in range(lo, top + 1):
                rest = n - size
                prev = self._rows[rest]
                if k - 1 < len(prev):
                    total += binomial(n - 1, size - 1) * prev[k - 1]
            row[k] = total
        return tuple(row)

    def entry(self, n: int, k: int) -> int:
        if n < 0 or k < 0 or not self.band.supports(n, k):
            return 1 if n == 0 and k == 0 else 0
        return super().entry(n, k)


def band_table(band: SizeBand) -> BoundedStirlingTable:
    return memo_registry.get_or_create("band", band, lambda: BoundedStirlingTable(band))


def stirling_in_band(n: int, k: int, band: Optional[SizeBand] = None) -> int:
    """Partitions of [n] into k non-empty blocks, every block size inside band."""
    band = band or SizeBand.unbounded()
    if n < 0 or k < 0:
        return 0
    return band_table(band).entry(n, k)


def stirling_le(n: int, k: int, m: int) -> int:
    """{n brace k}_{<=m}."""
    return stirling_in_band(n, k, SizeBand.at_most(m))


def stirling_ge(n: int, k: int, ell: int) -> int:
    """{n brace k}_{>=l}."""
    return stirling_in_band(n, k, SizeBand.at_least(ell))


def stirling_band(n: int, k: int, ell: int, m: int) -> int:
    """Partitions of [n] into k blocks with sizes in [l, m]; l > m is rejected."""
    return stirling_in_band(n, k, SizeBand.between(ell, m))


def bell_in_band(n: int, band: Optional[SizeBand] = None) -> int:
    """Partitions of [n] (any number of blocks) with every block size inside band."""
    if n < 0:
        raise ValueError(f"negative n {n}")
    return sum(stirling_in_band(n, k, band) for k in range(n + 1))


def bell_le(n: int, m: int) -> int:
    """Restricted Bell number: partitions of [n] with blocks of size at most m."""
    return bell_in_band(n, SizeBand.at_most(m))


def stirling_le_cumulative(n: int, k: int, m: int) -> int:
    """sum_{i=1..k} {n brace i}_{<=m}."""
    if k < 1:
        raise ValueError(f"cumulative restricted Stirling needs k >= 1, got {k}")
    return sum(stirling_le(n, i, m) for i in range(1, k + 1))
