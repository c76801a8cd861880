"""
Exponential generating functions of the counting families.

Partitions whose blocks have sizes in A, grouped into cells described by an outer
series beta, have EGF beta(alpha(x)) with alpha = sum_{a in A} x^a / a!. Every
family below is that composition for a particular beta.
"""

import logging
from fractions import Fraction
from typing import Iterable, Optional, Union

from mixedstirling.bounded.size_band import SizeBand
from mixedstirling.egf.series import (
    Series, series_add, series_compose, series_monomial, series_mul,
    series_one, series_pow, series_scale, series_zero,
)
from mixedstirling.exact_core.arithmetic import factorial
from mixedstirling.mixed.cells import CellSpec, MixedParams

logger = logging.getLogger(__name__)


def series_block_class(sizes: Iterable[int], order: int) -> Series:
    """sum_{a in sizes, a <= order} x^a / a!."""
    sizes = set(sizes)
    if not sizes:
        raise ValueError("block-size set is empty")
    if min(sizes) < 1:
        raise ValueError(f"block sizes must be >= 1, got {sorted(sizes)}")
    alpha = series_zero(order)
    for a in sorted(sizes):
        if a <= order:
            alpha = series_add(alpha, series_monomial(a, order, Fraction(1, factorial(a))))
    return alpha


def series_band_class(band: SizeBand, order: int) -> Series:
    """Block class of a size band; empty bands beyond order give the zero series."""
    sizes = band.sizes(order)
    if not sizes:
        return series_zero(order)
    return series_block_class(sizes, order)


def egf_exp_tail(start: int, order: int) -> Series:
    """e^x - sum_{j < start} x^j / j!."""
    if start < 0:
        raise ValueError(f"negative start {start}")
    coeffs = [Fraction(0)] * (order + 1)
    for j in range(start, order + 1):
        coeffs[j] = Fraction(1, factorial(j))
    return Series(tuple(coeffs))


def _cells_outer(c: int, may_be_empty: bool, order: int) -> Series:
    # c indistinguishable cells: x^c / c!, or sum_{j <= c} x^j / j! when some may stay empty
    if may_be_empty:
        return Series(
            tuple(Fraction(1, factorial(j)) if j <= c else Fraction(0) for j in range(order + 1))
        )
    return series_monomial(c, order, Fraction(1, factorial(c)))


def egf_stirling_band(k: int, band: SizeBand, order: int) -> Series:
    """EGF of {n brace k}_band: (x^k / k!) composed with the band's block class."""
    if k < 0:
        raise ValueError(f"negative block count {k}")
    beta = series_monomial(k, order, Fraction(1, factorial(k)))
    return series_compose(beta, series_band_class(band, order))


def egf_mixed(
    target: Union[CellSpec, MixedParams],
    band: Optional[SizeBand] = None,
    order: int = 12,
) -> Series:
    """
    EGF of a mixed family.

    For a CellSpec this is prod_i beta_i(alpha) with one outer series per label;
    for MixedParams it is alpha^(r+k-1) / r!, and the params' own band is used
    unless band is given.
    """
    if isinstance(target, MixedParams):
        band = band or target.band
        alpha = series_band_class(band, order)
        s = series_scale(series_pow(alpha, target.r + target.k - 1), Fraction(1, factorial(target.r)))
        logger.debug(f"[EGF] mixed k={target.k} r={target.r} band={band} order={order}")
        return s

    band = band or SizeBand.unbounded()
    alpha = series_band_class(band, order)
    s = series_one(order)
    for i, c in enumerate(target.counts):
        s = series_mul(s, series_compose(_cells_outer(c, target.may_be_empty(i), order), alpha))
    logger.debug(f"[EGF] cells {target.counts} band={band} order={order}")
    return s
