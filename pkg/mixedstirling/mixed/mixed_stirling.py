"""
Mixed partition numbers and mixed Stirling numbers of the second kind.

mixed_count counts partitions of [n] into the cells of a CellSpec (cells of one
label are interchangeable, all cells non-empty, sizes inside a band).
S_band(n, k, r) is the setting with r cells labeled 1 and k-1 singly labeled
cells; s_mixed evaluates it by four independent algorithms that must agree.
"""

import itertools
import logging
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from mixedstirling.bounded.bounded_stirling import stirling_in_band
from mixedstirling.bounded.size_band import SizeBand
from mixedstirling.exact_core.arithmetic import binomial, factorial, multinomial
from mixedstirling.mixed.cells import CellSpec, MixedAlgorithm, MixedParams

logger = logging.getLogger(__name__)

RECURRENCE_CACHE_SIZE = 1 << 16


# ══════════════════════════════════════════════════════════════════════════════
# General cell specifications
# ══════════════════════════════════════════════════════════════════════════════

def weak_compositions(n: int, ranges: Sequence[Tuple[int, int]]) -> Iterator[Tuple[int, ...]]:
    """Tuples (l1..lk) summing to n with lo_i <= l_i <= hi_i."""
    if not ranges:
        if n == 0:
            yield ()
        return
    (lo, hi), rest = ranges[0], ranges[1:]
    rest_min = sum(a for a, _ in rest)
    rest_max = sum(b for _, b in rest)
    for first in range(max(lo, n - rest_max), min(hi, n - rest_min) + 1):
        for tail in weak_compositions(n - first, rest):
            yield (first,) + tail


def _label_ranges(n: int, counts: Sequence[int], band: SizeBand) -> List[Tuple[int, int]]:
    ranges = []
    for c in counts:
        if c == 0:
            ranges.append((0, 0))
        else:
            hi = n if band.hi is None else min(n, c * band.hi)
            ranges.append((c * band.lo, hi))
    return ranges


def mixed_count_convolution(n: int, counts: Sequence[int], band: Optional[SizeBand] = None) -> int:
    """
    Sum over the numbers of elements (l1..lk) landing in each label class of
    multinomial(n; l1..lk) * prod_i {l_i brace c_i}_band.
    """
    band = band or SizeBand.unbounded()
    total = 0
    for parts in weak_compositions(n, _label_ranges(n, counts, band)):
        term = multinomial(n, parts)
        for size, c in zip(parts, counts):
            term *= stirling_in_band(size, c, band)
            if term == 0:
                break
        total += term
    return total


def mixed_count_collapsed(n: int, counts: Sequence[int], band: Optional[SizeBand] = None) -> int:
    """multinomial(c1+..+ck; c1..ck) * {n brace c1+..+ck}_band."""
    band = band or SizeBand.unbounded()
    cells = sum(counts)
    return multinomial(cells, counts) * stirling_in_band(n, cells, band)


def mixed_count(n: int, spec: CellSpec, band: Optional[SizeBand] = None) -> int:
    """Partitions of [n] into the (all non-empty) cells of spec, computed two ways."""
    if n < 0:
        raise ValueError(f"negative n {n}")
    if not spec.all_nonempty:
        raise ValueError("spec has may-be-empty labels; use mixed_count_relaxed")
    band = band or SizeBand.unbounded()
    by_convolution = mixed_count_convolution(n, spec.counts, band)
    by_collapse = mixed_count_collapsed(n, spec.counts, band)
    if by_convolution != by_collapse:
        logger.error(
            f"[MIXED] convolution {by_convolution} != collapsed {by_collapse} "
            f"for n={n}, counts={spec.counts}, band={band}"
        )
        raise ArithmeticError(f"mixed_count disagreement for n={n}, counts={spec.counts}")
    return by_collapse


def mixed_count_relaxed(n: int, spec: CellSpec, band: Optional[SizeBand] = None) -> int:
    """Like mixed_count, but may-be-empty labels use any 0 <= j_i <= c_i of their cells."""
    if n < 0:
        raise ValueError(f"negative n {n}")
    band = band or SizeBand.unbounded()
    choices = [
        range(c + 1) if spec.may_be_empty(i) else (c,)
        for i, c in enumerate(spec.counts)
    ]
    return sum(mixed_count_collapsed(n, js, band) for js in itertools.product(*choices))


# ══════════════════════════════════════════════════════════════════════════════
# S_band(n, k, r)
# ══════════════════════════════════════════════════════════════════════════════

def _outside(n: int, k: int, r: int, band: SizeBand) -> bool:
    """True when S_band(n, k, r) is 0 for lack of elements or block sizes."""
    return n < 0 or k < 1 or r < 0 or not band.supports(n, k + r - 1)


def _s_closed_form(n: int, k: int, r: int, band: SizeBand) -> int:
    # pick k-1 of the k+r-1 blocks and order them as labels 2..k
    if _outside(n, k, r, band):
        return 0
    cells = k + r - 1
    return binomial(cells, k - 1) * factorial(k - 1) * stirling_in_band(n, cells, band)


def _s_convolution(n: int, k: int, r: int, band: SizeBand) -> int:
    # i elements go to the label-1 cells, the rest to the k-1 labeled cells
    if _outside(n, k, r, band):
        return 0
    ordered = factorial(k - 1)
    total = 0
    for i in range(n + 1):
        first = stirling_in_band(i, r, band)
        if first:
            total += binomial(n, i) * first * stirling_in_band(n - i, k - 1, band) * ordered
    return total


@lru_cache(maxsize=RECURRENCE_CACHE_SIZE)
def _s_element(n: int, k: int, r: int, band: SizeBand) -> int:
    # element n joins `size - 1` companions in a label-1 cell or a labeled cell
    if _outside(n, k, r, band):
        return 0
    if n == 0:
        return 1 if k == 1 and r == 0 else 0
    total = 0
    for size in band.sizes(n):
        rest = n - size
        term = _s_element(rest, k, r - 1, band) if r >= 1 else 0
        if k >= 2:
            term += (k - 1) * _s_element(rest, k - 1, r, band)
        total += binomial(n - 1, size - 1) * term
    return total


@lru_cache(maxsize=RECURRENCE_CACHE_SIZE)
def _s_three_case(n: int, k: int, r: int, band: SizeBand) -> int:
    """
    Insert element n into one of the k+r-1 blocks of a partition of [n-1], drop
    the insertions that push a block past hi, and add the partitions where the
    block of n has exactly lo elements (singletons when lo = 1).
    """
    if _outside(n, k, r, band):
        return 0
    if n == 0:
        return 1 if k == 1 and r == 0 else 0

    def without_block(rest: int) -> int:
        v = _s_three_case(rest, k, r - 1, band) if r >= 1 else 0
        if k >= 2:
            v += (k - 1) * _s_three_case(rest, k - 1, r, band)
        return v

    total = (k + r - 1) * _s_three_case(n - 1, k, r, band)
    if band.hi is not None and n - 1 >= band.hi:
        total -= binomial(n - 1, band.hi) * without_block(n - 1 - band.hi)
    if n >= band.lo:
        total += binomial(n - 1, band.lo - 1) * without_block(n - band.lo)
    return total


ALGORITHMS: Dict[MixedAlgorithm, Callable[[int, int, int, SizeBand], int]] = {
    MixedAlgorithm.CLOSED_FORM: _s_closed_form,
    MixedAlgorithm.CONVOLUTION: _s_convolution,
    MixedAlgorithm.ELEMENT_RECURRENCE: _s_element,
    MixedAlgorithm.THREE_CASE: _s_three_case,
}


def s_mixed(p: MixedParams, algorithm: MixedAlgorithm = MixedAlgorithm.CLOSED_FORM) -> int:
    """S_band(n, k, r) by the selected algorithm."""
    return ALGORITHMS[MixedAlgorithm(algorithm)](p.n, p.k, p.r, p.band)


def s_mixed_three_case(p: MixedParams) -> int:
    return _s_three_case(p.n, p.k, p.r, p.band)


def s_mixed_all(p: MixedParams) -> Dict[str, int]:
    """Every algorithm's value, keyed by algorithm name."""
    return {alg.value: fn(p.n, p.k, p.r, p.band) for alg, fn in ALGORITHMS.items()}


def s_value(n: int, k: int, r: int, band: Optional[SizeBand] = None) -> int:
    """S_band(n, k, r) with 0 outside the domain (negative n or r, k < 1)."""
    return _s_closed_form(n, k, r, band or SizeBand.unbounded())


# ══════════════════════════════════════════════════════════════════════════════
# Mixed Bell numbers and r-Stirling numbers
# ══════════════════════════════════════════════════════════════════════════════

def mixed_bell(n: int, k: int, r: int) -> int:
    """Partitions of [n] into r label-1 cells and k-1 labeled cells, any of them empty."""
    if k < 1 or r < 0:
        raise ValueError(f"mixed_bell needs k >= 1 and r >= 0, got k={k}, r={r}")
    spec = CellSpec.relaxed((r,) + (1,) * (k - 1))
    return mixed_count_relaxed(n, spec, SizeBand.unbounded())


def r_stirling_via_mixed(n: int, k: int, r: int) -> int:
    """
    {n brace k}_r = sum_i C(r, i) S(n-r, i+1, k-r): after placing 1..r in their own
    blocks, i of those r blocks receive further elements and the other k-r blocks
    are built from the remaining elements alone.
    """
    if not 0 <= r <= k <= n:
        raise ValueError(f"r_stirling_via_mixed needs 0 <= r <= k <= n, got n={n}, k={k}, r={r}")
    return sum(binomial(r, i) * s_value(n - r, i + 1, k - r) for i in range(k + 1))
