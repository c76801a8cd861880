"""
Identity catalogue.

Every published identity about restricted, associated and mixed Stirling numbers
is registered here, in the form it was printed (kind=as_stated). Where the
printed form fails, a corrected case with the same subject is registered next to
it and names its partner through paired_with. Property cases cross-check the
algorithms of this package against each other and against the partition oracle.

Left-hand sides use the production algorithms; right-hand sides evaluate the
identity term by term from independent building blocks.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

from mixedstirling.bounded.bounded_stirling import stirling_in_band
from mixedstirling.bounded.size_band import SizeBand
from mixedstirling.config import settings
from mixedstirling.egf.families import egf_exp_tail, egf_mixed, egf_stirling_band, series_block_class
from mixedstirling.egf.series import Series, count_from_series, series_pow, series_scale
from mixedstirling.exact_core.arithmetic import binomial, factorial, multinomial
from mixedstirling.exact_core.stirling import (
    bell, r_stirling, stirling2, stirling2_explicit, stirling2_howard,
)
from mixedstirling.harness.models import CaseKind, CaseStatus, IdentityDefinition
from mixedstirling.harness.registry import IdentityRegistry
from mixedstirling.mixed.cells import CellSpec, MixedAlgorithm, MixedParams
from mixedstirling.mixed.mixed_stirling import (
    weak_compositions, mixed_count_collapsed, mixed_count_convolution, mixed_count_relaxed,
    r_stirling_via_mixed, s_mixed, s_value,
)
from mixedstirling.oracle.partition_oracle import OracleQuery, oracle_count_cached

logger = logging.getLogger(__name__)

UNBOUNDED = SizeBand.unbounded()
SERIES_CACHE_SIZE = 256


# ══════════════════════════════════════════════════════════════════════════════
# Building blocks
# ══════════════════════════════════════════════════════════════════════════════

def C(n: int, k: int) -> int:
    """Binomial with 0 for any negative argument."""
    if n < 0 or k < 0:
        return 0
    return binomial(n, k)


def S(n: int, k: int, r: int, band: SizeBand = UNBOUNDED) -> int:
    return s_value(n, k, r, band)


def T(n: int, k: int, band: SizeBand = UNBOUNDED) -> int:
    return stirling_in_band(n, k, band)


def plain_stirling(n: int, k: int) -> int:
    if n < 0 or k < 0:
        return 0
    return stirling2(n, k)


def mixed_counts(k: int, r: int) -> Tuple[int, ...]:
    return (r,) + (1,) * (k - 1)


def oracle(
    n: int,
    counts: Sequence[int],
    band: SizeBand = UNBOUNDED,
    relaxed_labels: Optional[Sequence[int]] = None,
    prefix: int = 0,
) -> int:
    if relaxed_labels is None:
        spec = CellSpec.strict(counts)
    else:
        spec = CellSpec.relaxed(counts, relaxed_labels)
    q = OracleQuery(n=n, spec=spec, band=band, distinct_prefix=prefix)
    return oracle_count_cached(q)


def egf_order(n: int) -> int:
    # one shared order keeps the series caches small
    return max(n, settings.harness_egf_max_n)


@lru_cache(maxsize=SERIES_CACHE_SIZE)
def _power_over(alpha: Series, power: int, divisor: int) -> Series:
    return series_scale(series_pow(alpha, power), Fraction(1, divisor))


def _at_most_class(m: int, order: int) -> Series:
    return series_block_class(range(1, m + 1), order)


def _interval_class(ell: int, m: int, order: int) -> Series:
    return series_block_class(range(ell, m + 1), order)


@lru_cache(maxsize=SERIES_CACHE_SIZE)
def _cells_series(counts: Tuple[int, ...], relaxed: bool, order: int) -> Series:
    spec = CellSpec.relaxed(counts) if relaxed else CellSpec.strict(counts)
    return egf_mixed(spec, UNBOUNDED, order)


@lru_cache(maxsize=SERIES_CACHE_SIZE)
def _mixed_series(k: int, r: int, band: SizeBand, order: int) -> Series:
    return egf_mixed(MixedParams(n=0, k=k, r=r, band=band), band, order)


@lru_cache(maxsize=SERIES_CACHE_SIZE)
def _band_series(k: int, band: SizeBand, order: int) -> Series:
    return egf_stirling_band(k, band, order)


def _integral_coefficient(s: Series, n: int) -> int:
    value = s[n] * factorial(n)
    return int(value.denominator == 1 and value >= 0)


# ══════════════════════════════════════════════════════════════════════════════
# Printed right-hand sides
# ══════════════════════════════════════════════════════════════════════════════

def _convolution_with_bounds(
    n: int, counts: Sequence[int], band: SizeBand, lo: int, hi: int,
) -> int:
    """Multinomial convolution where every label receives between lo and hi elements."""
    ranges = [(lo, min(hi, n))] * len(counts)
    total = 0
    for parts in weak_compositions(n, ranges):
        term = multinomial(n, parts)
        for size, c in zip(parts, counts):
            term *= T(size, c, band)
        total += term
    return total


def _split_label1_sum(n: int, k: int, r: int, s: int, band: SizeBand, j_lo: int, j_hi: int) -> int:
    return sum(
        C(n, j) * T(n - j, s, band) * S(j, k, r - s, band)
        for j in range(max(j_lo, 0), min(j_hi, n) + 1)
    )


def _split_labeled_sum(n: int, k: int, r: int, s: int, band: SizeBand, j_lo: int, j_hi: int) -> int:
    return sum(
        C(n, j) * C(k - 1, s) * factorial(s) * T(n - j, s, band) * S(j, k - s, r, band)
        for j in range(max(j_lo, 0), min(j_hi, n) + 1)
    )


def _three_case_restricted(n: int, k: int, r: int, m: int, inner_sign: int) -> int:
    band = SizeBand.at_most(m)
    singles = S(n - 1, k, r - 1, band) + (k - 1) * S(n - 1, k - 1, r, band)
    spread = (k + r - 1) * S(n - 1, k, r, band)
    label1_bad = C(n - 1, m) * S(n - m - 1, k, r - 1, band)
    labeled_bad = (k - 1) * C(n - 1, m) * S(n - m - 1, k - 1, r, band)
    return singles + spread - (label1_bad + inner_sign * labeled_bad)


# ══════════════════════════════════════════════════════════════════════════════
# Filters
# ══════════════════════════════════════════════════════════════════════════════

def _positive(*names: str) -> Callable[..., bool]:
    def check(**p) -> bool:
        return all(p[name] >= 1 for name in names)
    return check


def _restricted_positive(**p) -> bool:
    return p["band"].is_restricted and p["n"] >= 1 and p["k"] >= 1 and p["r"] >= 1


def _has_cells(**p) -> bool:
    return p["k"] + p["r"] - 1 >= 1


# ══════════════════════════════════════════════════════════════════════════════
# Catalogue
# ══════════════════════════════════════════════════════════════════════════════

def _classical() -> List[IdentityDefinition]:
    return [
        IdentityDefinition(
            id="stirling-classical-agreement",
            description="Stirling triangle recurrence equals the inclusion-exclusion sum",
            kind=CaseKind.PROPERTY,
            axes=("n", "k"),
            lhs=lambda n, k: stirling2(n, k),
            rhs=lambda n, k: stirling2_explicit(n, k),
            tags=("stirling",),
        ),
        IdentityDefinition(
            id="stirling-howard-agreement",
            description="Stirling triangle recurrence equals the rational sum over compositions",
            kind=CaseKind.PROPERTY,
            axes=("n", "k"),
            lhs=lambda n, k: stirling2(n, k),
            rhs=lambda n, k: stirling2_howard(n, k),
            tags=("stirling",),
        ),
        IdentityDefinition(
            id="bell-row-sum",
            description="Bell numbers are the row sums of the Stirling triangle",
            kind=CaseKind.PROPERTY,
            axes=("n",),
            lhs=lambda n: bell(n),
            rhs=lambda n: sum(stirling2_explicit(n, k) for k in range(n + 1)),
            tags=("bell",),
        ),
        IdentityDefinition(
            id="r-stirling-reduction",
            description="r-Stirling numbers with r = 1 are the plain Stirling numbers",
            kind=CaseKind.PROPERTY,
            axes=("n", "k"),
            applies=_positive("n"),
            lhs=lambda n, k: r_stirling(n, k, 1),
            rhs=lambda n, k: stirling2(n, k),
            tags=("r-stirling",),
        ),
    ]


def _bounded() -> List[IdentityDefinition]:
    return [
        IdentityDefinition(
            id="restricted-recurrence-as-stated",
            description="{n,k}<=m = sum_{i<m} C(n,i) {n-i,k-i}<=m",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "m"),
            applies=_positive("n"),
            lhs=lambda n, k, m: T(n, k, SizeBand.at_most(m)),
            rhs=lambda n, k, m: sum(
                C(n, i) * T(n - i, k - i, SizeBand.at_most(m)) for i in range(m)
            ),
            paired_with="restricted-recurrence-corrected",
            note="The i = 0 term already equals the left side; every other non-zero term over-counts.",
            expected_status=CaseStatus.FLAGGED,
            tags=("restricted", "errata"),
        ),
        IdentityDefinition(
            id="restricted-recurrence-corrected",
            description="{n,k}<=m = sum_{i<m} C(n-1,i) {n-1-i,k-1}<=m (element n with i companions)",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "m"),
            applies=_positive("n"),
            lhs=lambda n, k, m: T(n, k, SizeBand.at_most(m)),
            rhs=lambda n, k, m: sum(
                C(n - 1, i) * T(n - 1 - i, k - 1, SizeBand.at_most(m)) for i in range(m)
            ),
            paired_with="restricted-recurrence-as-stated",
            note="Follow element n: its block takes i of the other n-1 elements.",
            tags=("restricted",),
        ),
        IdentityDefinition(
            id="associated-recurrence-as-stated",
            description="{n,k}>=l = sum_{i=l}^{n-1} C(n-1,i) {n-1-i,k-1}>=l",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "ell"),
            applies=_positive("n"),
            lhs=lambda n, k, ell: T(n, k, SizeBand.at_least(ell)),
            rhs=lambda n, k, ell: sum(
                C(n - 1, i) * T(n - 1 - i, k - 1, SizeBand.at_least(ell)) for i in range(ell, n)
            ),
            paired_with="associated-recurrence-corrected",
            note="Starting at i = l drops the blocks of size exactly l.",
            expected_status=CaseStatus.FLAGGED,
            tags=("associated", "errata"),
        ),
        IdentityDefinition(
            id="associated-recurrence-corrected",
            description="{n,k}>=l = sum_{i=l-1}^{n-1} C(n-1,i) {n-1-i,k-1}>=l",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "ell"),
            applies=_positive("n"),
            lhs=lambda n, k, ell: T(n, k, SizeBand.at_least(ell)),
            rhs=lambda n, k, ell: sum(
                C(n - 1, i) * T(n - 1 - i, k - 1, SizeBand.at_least(ell)) for i in range(ell - 1, n)
            ),
            paired_with="associated-recurrence-as-stated",
            note="Element n needs at least l-1 companions.",
            tags=("associated",),
        ),
        IdentityDefinition(
            id="band-derivative-recurrence-as-stated",
            description="{n+1,k} in [l,m] = sum_{i=l-1}^{m-1} C(n,i) {n-i,k-1} (plain Stirling summand)",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "ell", "m"),
            applies=lambda n, k, ell, m: ell <= m,
            lhs=lambda n, k, ell, m: T(n + 1, k, SizeBand.between(ell, m)),
            rhs=lambda n, k, ell, m: sum(
                C(n, i) * plain_stirling(n - i, k - 1) for i in range(ell - 1, m)
            ),
            paired_with="band-derivative-recurrence-corrected",
            note="Differentiating the band EGF leaves the band on the summand.",
            expected_status=CaseStatus.FLAGGED,
            tags=("band", "errata"),
        ),
        IdentityDefinition(
            id="band-derivative-recurrence-corrected",
            description="{n+1,k}_band = sum_{size in band} C(n,size-1) {n+1-size,k-1}_band",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "band"),
            lhs=lambda n, k, band: T(n + 1, k, band),
            rhs=lambda n, k, band: sum(
                C(n, size - 1) * T(n + 1 - size, k - 1, band) for size in band.sizes(n + 1)
            ),
            paired_with="band-derivative-recurrence-as-stated",
            tags=("band",),
        ),
    ]


def _mixed() -> List[IdentityDefinition]:
    cases = [
        IdentityDefinition(
            id="multinomial-convolution-restricted-as-stated",
            description="S<=m(n,k,r) as a multinomial convolution with every label taking at most m elements",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "m"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, m: S(n, k, r, SizeBand.at_most(m)),
            rhs=lambda n, k, r, m: _convolution_with_bounds(
                n, mixed_counts(k, r), SizeBand.at_most(m), 0, m
            ),
            paired_with="multinomial-convolution-corrected",
            note="c cells of one label may hold up to c*m elements; the per-label bound m is too strict.",
            expected_status=CaseStatus.FLAGGED,
            tags=("restricted", "errata"),
        ),
        IdentityDefinition(
            id="multinomial-convolution-corrected",
            description="Mixed count as a multinomial convolution without a per-label bound",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "r", "band"),
            lhs=lambda n, k, r, band: S(n, k, r, band),
            rhs=lambda n, k, r, band: mixed_count_convolution(n, mixed_counts(k, r), band),
            paired_with="multinomial-convolution-restricted-as-stated",
            tags=("mixed",),
        ),
        IdentityDefinition(
            id="multinomial-convolution-associated",
            description="S>=l(n,k,r) as a multinomial convolution with every label taking at least l elements",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "ell"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, ell: S(n, k, r, SizeBand.at_least(ell)),
            rhs=lambda n, k, r, ell: _convolution_with_bounds(
                n, mixed_counts(k, r), SizeBand.at_least(ell), ell, n
            ),
            tags=("associated",),
        ),
        IdentityDefinition(
            id="mixed-count-collapsed",
            description="Multinomial convolution equals multinomial(sum c; c) times {n, sum c}_band",
            kind=CaseKind.AS_STATED,
            axes=("n", "counts", "band"),
            lhs=lambda n, counts, band: mixed_count_convolution(n, counts, band),
            rhs=lambda n, counts, band: mixed_count_collapsed(n, counts, band),
            tags=("mixed",),
        ),
        IdentityDefinition(
            id="mixed-convolution-restricted",
            description="S<=m(n,k,r) = sum_i C(n,i) {i,r}<=m {n-i,k-1}<=m (k-1)!",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "m"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, m: S(n, k, r, SizeBand.at_most(m)),
            rhs=lambda n, k, r, m: sum(
                C(n, i) * T(i, r, SizeBand.at_most(m)) * T(n - i, k - 1, SizeBand.at_most(m))
                * factorial(k - 1)
                for i in range(r, n + 1)
            ),
            tags=("restricted",),
        ),
        IdentityDefinition(
            id="mixed-convolution-associated",
            description="S>=l(n,k,r) = sum_i C(n,i) {i,r}>=l {n-i,k-1}>=l (k-1)!",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "ell"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, ell: S(n, k, r, SizeBand.at_least(ell)),
            rhs=lambda n, k, r, ell: sum(
                C(n, i) * T(i, r, SizeBand.at_least(ell)) * T(n - i, k - 1, SizeBand.at_least(ell))
                * factorial(k - 1)
                for i in range(r, n + 1)
            ),
            tags=("associated",),
        ),
        IdentityDefinition(
            id="mixed-closed-form",
            description="S_band(n,k,r) = (k-1)! C(k+r-1,k-1) {n,k+r-1}_band",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "band"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, band: mixed_count_convolution(n, mixed_counts(k, r), band),
            rhs=lambda n, k, r, band: factorial(k - 1) * C(k + r - 1, k - 1) * T(n, k + r - 1, band),
            tags=("mixed",),
        ),
        IdentityDefinition(
            id="mixed-element-recurrence-restricted",
            description="S<=m(n,k,r) = sum_{i<m} C(n-1,i)((k-1)S(n-i-1,k-1,r) + S(n-i-1,k,r-1))",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "m"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, m: S(n, k, r, SizeBand.at_most(m)),
            rhs=lambda n, k, r, m: sum(
                C(n - 1, i) * (
                    (k - 1) * S(n - i - 1, k - 1, r, SizeBand.at_most(m))
                    + S(n - i - 1, k, r - 1, SizeBand.at_most(m))
                )
                for i in range(m)
            ),
            tags=("restricted",),
        ),
        IdentityDefinition(
            id="mixed-element-recurrence-associated-as-stated",
            description="S>=l(n,k,r) = sum_{i=l-1}^{n-1} C(n-1,i)(S(n-i-1,k-1,r) + S(n-i-1,k,r-1))",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "ell"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, ell: S(n, k, r, SizeBand.at_least(ell)),
            rhs=lambda n, k, r, ell: sum(
                C(n - 1, i) * (
                    S(n - i - 1, k - 1, r, SizeBand.at_least(ell))
                    + S(n - i - 1, k, r - 1, SizeBand.at_least(ell))
                )
                for i in range(ell - 1, n)
            ),
            paired_with="mixed-element-recurrence-associated-corrected",
            note="The label of n's cell can be any of k-1 labels; the factor k-1 is missing.",
            expected_status=CaseStatus.FLAGGED,
            tags=("associated", "errata"),
        ),
        IdentityDefinition(
            id="mixed-element-recurrence-associated-corrected",
            description="S>=l(n,k,r) = sum_{i=l-1}^{n-1} C(n-1,i)((k-1)S(n-i-1,k-1,r) + S(n-i-1,k,r-1))",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "r", "ell"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, ell: S(n, k, r, SizeBand.at_least(ell)),
            rhs=lambda n, k, r, ell: sum(
                C(n - 1, i) * (
                    (k - 1) * S(n - i - 1, k - 1, r, SizeBand.at_least(ell))
                    + S(n - i - 1, k, r - 1, SizeBand.at_least(ell))
                )
                for i in range(ell - 1, n)
            ),
            paired_with="mixed-element-recurrence-associated-as-stated",
            tags=("associated",),
        ),
        IdentityDefinition(
            id="mixed-three-case-restricted-as-stated",
            description="Three-case recurrence for S<=m with correction -(A - (k-1)B)",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "m"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, m: S(n, k, r, SizeBand.at_most(m)),
            rhs=lambda n, k, r, m: _three_case_restricted(n, k, r, m, inner_sign=-1),
            paired_with="mixed-three-case-restricted-corrected",
            note="Both kinds of overfull block are bad insertions; both terms must be subtracted.",
            expected_status=CaseStatus.FLAGGED,
            tags=("restricted", "errata"),
        ),
        IdentityDefinition(
            id="mixed-three-case-restricted-corrected",
            description="Three-case recurrence for S<=m with correction -(A + (k-1)B)",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "r", "m"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, m: S(n, k, r, SizeBand.at_most(m)),
            rhs=lambda n, k, r, m: _three_case_restricted(n, k, r, m, inner_sign=1),
            paired_with="mixed-three-case-restricted-as-stated",
            tags=("restricted",),
        ),
        IdentityDefinition(
            id="mixed-three-case-associated",
            description="S>=l(n,k,r) = (k+r-1)S(n-1,k,r) + C(n-1,l-1)((k-1)S(n-l,k-1,r) + S(n-l,k,r-1))",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "ell"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, ell: S(n, k, r, SizeBand.at_least(ell)),
            rhs=lambda n, k, r, ell: (
                (k + r - 1) * S(n - 1, k, r, SizeBand.at_least(ell))
                + C(n - 1, ell - 1) * (
                    (k - 1) * S(n - ell, k - 1, r, SizeBand.at_least(ell))
                    + S(n - ell, k, r - 1, SizeBand.at_least(ell))
                )
            ),
            tags=("associated",),
        ),
    ]
    for alg in (MixedAlgorithm.CONVOLUTION, MixedAlgorithm.ELEMENT_RECURRENCE, MixedAlgorithm.THREE_CASE):
        cases.append(IdentityDefinition(
            id=f"mixed-algorithm-{alg.value.replace('_', '-')}",
            description=f"S_band(n,k,r) by {alg.value} equals the closed form",
            kind=CaseKind.PROPERTY,
            axes=("n", "k", "r", "band"),
            lhs=lambda n, k, r, band: S(n, k, r, band),
            rhs=lambda n, k, r, band, alg=alg: s_mixed(MixedParams(n=n, k=k, r=r, band=band), alg),
            tags=("mixed", "algorithms"),
        ))
    return cases


def _splits() -> List[IdentityDefinition]:
    def label1_applies(n, k, r, s, band) -> bool:
        return _restricted_positive(n=n, k=k, r=r, band=band) and 1 <= s <= r

    def labeled_applies(n, k, r, s, band) -> bool:
        return _restricted_positive(n=n, k=k, r=r, band=band) and 1 <= s < k

    return [
        IdentityDefinition(
            id="split-label1-blocks-as-stated",
            description="S(n,k,r) = sum_{j=k+r+1-s}^{n-s} C(n,j) {n-j,s} S(j,k,r-s)",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "s", "band"),
            applies=label1_applies,
            lhs=lambda n, k, r, s, band: S(n, k, r, band),
            rhs=lambda n, k, r, s, band: _split_label1_sum(n, k, r, s, band, k + r + 1 - s, n - s),
            paired_with="split-label1-blocks-corrected",
            note="The printed range is empty or truncated in most corners.",
            expected_status=CaseStatus.FLAGGED,
            tags=("split", "errata"),
        ),
        IdentityDefinition(
            id="split-label1-blocks-natural-bounds",
            description="Same sum over every j in 0..n",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "s", "band"),
            applies=label1_applies,
            lhs=lambda n, k, r, s, band: S(n, k, r, band),
            rhs=lambda n, k, r, s, band: _split_label1_sum(n, k, r, s, band, 0, n),
            paired_with="split-label1-blocks-corrected",
            note="Each configuration is produced once per choice of s of its r label-1 blocks.",
            expected_status=CaseStatus.FLAGGED,
            tags=("split", "errata"),
        ),
        IdentityDefinition(
            id="split-label1-blocks-corrected",
            description="S_band(n,k,r) = sum_j C(n,j) {n-j,s}_band S_band(j,k,r-s) / C(r,s)",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "r", "s", "band"),
            applies=lambda n, k, r, s, band: 1 <= s <= r,
            lhs=lambda n, k, r, s, band: S(n, k, r, band),
            rhs=lambda n, k, r, s, band: Fraction(
                _split_label1_sum(n, k, r, s, band, 0, n), C(r, s)
            ),
            paired_with="split-label1-blocks-as-stated",
            tags=("split",),
        ),
        IdentityDefinition(
            id="split-labeled-cells-as-stated",
            description="S(n,k,r) = sum_{j=k+r+1-s}^{n-s} C(n,j) C(k-1,s) s! {n-j,s} S(j,k-s,r)",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "s", "band"),
            applies=labeled_applies,
            lhs=lambda n, k, r, s, band: S(n, k, r, band),
            rhs=lambda n, k, r, s, band: _split_labeled_sum(n, k, r, s, band, k + r + 1 - s, n - s),
            paired_with="split-labeled-cells-corrected",
            note="The printed range is empty or truncated in most corners.",
            expected_status=CaseStatus.FLAGGED,
            tags=("split", "errata"),
        ),
        IdentityDefinition(
            id="split-labeled-cells-natural-bounds",
            description="Same sum over every j in 0..n",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "s", "band"),
            applies=labeled_applies,
            lhs=lambda n, k, r, s, band: S(n, k, r, band),
            rhs=lambda n, k, r, s, band: _split_labeled_sum(n, k, r, s, band, 0, n),
            paired_with="split-labeled-cells-corrected",
            note="Each configuration is produced once per choice of s of its k-1 labels.",
            expected_status=CaseStatus.FLAGGED,
            tags=("split", "errata"),
        ),
        IdentityDefinition(
            id="split-labeled-cells-corrected",
            description="S_band(n,k,r) = sum_j C(n,j) s! {n-j,s}_band S_band(j,k-s,r)",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "r", "s", "band"),
            applies=lambda n, k, r, s, band: 1 <= s < k,
            lhs=lambda n, k, r, s, band: S(n, k, r, band),
            rhs=lambda n, k, r, s, band: Fraction(
                _split_labeled_sum(n, k, r, s, band, 0, n), C(k - 1, s)
            ),
            paired_with="split-labeled-cells-as-stated",
            tags=("split",),
        ),
        IdentityDefinition(
            id="colored-label1-block-as-stated",
            description="r S<=m(n,k,r) = sum_{j=1}^{min(m,n+2-k-r)} C(n,j) S<=m(n,k,r-1)",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "m"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, m: r * S(n, k, r, SizeBand.at_most(m)),
            rhs=lambda n, k, r, m: sum(
                C(n, j) * S(n, k, r - 1, SizeBand.at_most(m))
                for j in range(1, min(m, n + 2 - k - r) + 1)
            ),
            paired_with="colored-label1-block-corrected",
            note="After removing the colored block of size j only n-j elements remain.",
            expected_status=CaseStatus.FLAGGED,
            tags=("restricted", "errata"),
        ),
        IdentityDefinition(
            id="colored-label1-block-corrected",
            description="r S_band(n,k,r) = sum_{j in band} C(n,j) S_band(n-j,k,r-1)",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "r", "band"),
            applies=_positive("r"),
            lhs=lambda n, k, r, band: r * S(n, k, r, band),
            rhs=lambda n, k, r, band: sum(
                C(n, j) * S(n - j, k, r - 1, band) for j in band.sizes(n)
            ),
            paired_with="colored-label1-block-as-stated",
            tags=("mixed",),
        ),
        IdentityDefinition(
            id="marked-element-as-stated",
            description="n S<=m(n,k,r) = sum_{j=1}^{min(m,n+2-k-r)} j C(n,j) [S<=m(n,k,r-1) + (k-1)S<=m(n,k-1,r)]",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r", "m"),
            applies=_positive("n", "r"),
            lhs=lambda n, k, r, m: n * S(n, k, r, SizeBand.at_most(m)),
            rhs=lambda n, k, r, m: sum(
                j * C(n, j) * (
                    S(n, k, r - 1, SizeBand.at_most(m))
                    + (k - 1) * S(n, k - 1, r, SizeBand.at_most(m))
                )
                for j in range(1, min(m, n + 2 - k - r) + 1)
            ),
            paired_with="marked-element-corrected",
            note="The remaining configuration lives on n-j elements, not n.",
            expected_status=CaseStatus.FLAGGED,
            tags=("restricted", "errata"),
        ),
        IdentityDefinition(
            id="marked-element-corrected",
            description="n S_band(n,k,r) = sum_{j in band} j C(n,j) [S_band(n-j,k,r-1) + (k-1)S_band(n-j,k-1,r)]",
            kind=CaseKind.CORRECTED,
            axes=("n", "k", "r", "band"),
            lhs=lambda n, k, r, band: n * S(n, k, r, band),
            rhs=lambda n, k, r, band: sum(
                j * C(n, j) * (S(n - j, k, r - 1, band) + (k - 1) * S(n - j, k - 1, r, band))
                for j in band.sizes(n)
            ),
            paired_with="marked-element-as-stated",
            tags=("mixed",),
        ),
    ]


def _egf() -> List[IdentityDefinition]:
    return [
        IdentityDefinition(
            id="egf-general",
            description="n![x^n] (e^x-1)^(sum c)/prod c! counts mixed partitions",
            kind=CaseKind.AS_STATED,
            axes=("n_egf", "counts"),
            lhs=lambda n, counts: mixed_count_convolution(n, counts, UNBOUNDED),
            rhs=lambda n, counts: count_from_series(_cells_series(tuple(counts), False, egf_order(n)), n),
            tags=("egf",),
        ),
        IdentityDefinition(
            id="egf-relaxed-cells",
            description="Cells that may stay empty contribute sum_{j<=c} alpha^j/j!",
            kind=CaseKind.PROPERTY,
            axes=("n_egf", "counts"),
            lhs=lambda n, counts: mixed_count_relaxed(n, CellSpec.relaxed(counts)),
            rhs=lambda n, counts: count_from_series(_cells_series(tuple(counts), True, egf_order(n)), n),
            tags=("egf",),
        ),
        IdentityDefinition(
            id="egf-mixed",
            description="n![x^n] (e^x-1)^(r+k-1)/r! = S(n,k,r)",
            kind=CaseKind.AS_STATED,
            axes=("n_egf", "k", "r"),
            applies=_positive("r"),
            lhs=lambda n, k, r: S(n, k, r),
            rhs=lambda n, k, r: count_from_series(
                _power_over(egf_exp_tail(1, egf_order(n)), r + k - 1, factorial(r)), n
            ),
            tags=("egf",),
        ),
        IdentityDefinition(
            id="egf-restricted-stirling",
            description="n![x^n] (sum_{j=1}^m x^j/j!)^k/k! = {n,k}<=m",
            kind=CaseKind.AS_STATED,
            axes=("n_egf", "k", "m"),
            lhs=lambda n, k, m: T(n, k, SizeBand.at_most(m)),
            rhs=lambda n, k, m: count_from_series(
                _power_over(_at_most_class(m, egf_order(n)), k, factorial(k)), n
            ),
            tags=("egf", "restricted"),
        ),
        IdentityDefinition(
            id="egf-associated-stirling",
            description="n![x^n] (e^x - sum_{j<l} x^j/j!)^k/k! = {n,k}>=l",
            kind=CaseKind.AS_STATED,
            axes=("n_egf", "k", "ell"),
            lhs=lambda n, k, ell: T(n, k, SizeBand.at_least(ell)),
            rhs=lambda n, k, ell: count_from_series(
                _power_over(egf_exp_tail(ell, egf_order(n)), k, factorial(k)), n
            ),
            note="Printed with upper limit m-1 in the subtracted sum; read as l-1.",
            tags=("egf", "associated"),
        ),
        IdentityDefinition(
            id="egf-band-stirling",
            description="n![x^n] (sum_{j=l}^m x^j/j!)^k/k! = {n,k} with sizes in [l,m]",
            kind=CaseKind.AS_STATED,
            axes=("n_egf", "k", "ell", "m"),
            applies=lambda n, k, ell, m: ell <= m,
            lhs=lambda n, k, ell, m: T(n, k, SizeBand.between(ell, m)),
            rhs=lambda n, k, ell, m: count_from_series(
                _power_over(_interval_class(ell, m, egf_order(n)), k, factorial(k)), n
            ),
            tags=("egf", "band"),
        ),
        IdentityDefinition(
            id="egf-band-composition",
            description="(x^k/k!) composed with the band block class extracts {n,k}_band",
            kind=CaseKind.PROPERTY,
            axes=("n_egf", "k", "band"),
            lhs=lambda n, k, band: T(n, k, band),
            rhs=lambda n, k, band: count_from_series(_band_series(k, band, egf_order(n)), n),
            tags=("egf", "band"),
        ),
        IdentityDefinition(
            id="egf-mixed-restricted",
            description="n![x^n] (sum_{j=1}^m x^j/j!)^(r+k-1)/r! = S<=m(n,k,r)",
            kind=CaseKind.AS_STATED,
            axes=("n_egf", "k", "r", "m"),
            applies=_positive("r"),
            lhs=lambda n, k, r, m: S(n, k, r, SizeBand.at_most(m)),
            rhs=lambda n, k, r, m: count_from_series(
                _power_over(_at_most_class(m, egf_order(n)), r + k - 1, factorial(r)), n
            ),
            tags=("egf", "restricted"),
        ),
        IdentityDefinition(
            id="egf-mixed-associated-as-stated",
            description="n![x^n] (e^x - sum_{j=0}^{l} x^j/j!)^(r+k-1)/r! = S>=l(n,k,r)",
            kind=CaseKind.AS_STATED,
            axes=("n_egf", "k", "r", "ell"),
            applies=_positive("r"),
            lhs=lambda n, k, r, ell: S(n, k, r, SizeBand.at_least(ell)),
            rhs=lambda n, k, r, ell: count_from_series(
                _power_over(egf_exp_tail(ell + 1, egf_order(n)), r + k - 1, factorial(r)), n
            ),
            paired_with="egf-mixed-associated-corrected",
            note="Subtracting x^l/l! as well forbids blocks of size exactly l.",
            expected_status=CaseStatus.FLAGGED,
            tags=("egf", "associated", "errata"),
        ),
        IdentityDefinition(
            id="egf-mixed-associated-corrected",
            description="n![x^n] (e^x - sum_{j<l} x^j/j!)^(r+k-1)/r! = S>=l(n,k,r)",
            kind=CaseKind.CORRECTED,
            axes=("n_egf", "k", "r", "ell"),
            applies=_positive("r"),
            lhs=lambda n, k, r, ell: S(n, k, r, SizeBand.at_least(ell)),
            rhs=lambda n, k, r, ell: count_from_series(
                _power_over(egf_exp_tail(ell, egf_order(n)), r + k - 1, factorial(r)), n
            ),
            paired_with="egf-mixed-associated-as-stated",
            tags=("egf", "associated"),
        ),
        IdentityDefinition(
            id="egf-mixed-band",
            description="egf_mixed extraction equals S_band(n,k,r) for every band",
            kind=CaseKind.PROPERTY,
            axes=("n_egf", "k", "r", "band"),
            lhs=lambda n, k, r, band: S(n, k, r, band),
            rhs=lambda n, k, r, band: count_from_series(_mixed_series(k, r, band, egf_order(n)), n),
            tags=("egf", "mixed"),
        ),
        IdentityDefinition(
            id="egf-integrality",
            description="n![x^n] of every assembled mixed EGF is a non-negative integer",
            kind=CaseKind.PROPERTY,
            axes=("n_egf", "k", "r", "band"),
            lhs=lambda n, k, r, band: _integral_coefficient(_mixed_series(k, r, band, egf_order(n)), n),
            rhs=lambda n, k, r, band: 1,
            tags=("egf",),
        ),
    ]


def _r_stirling_and_examples() -> List[IdentityDefinition]:
    worked_band = SizeBand.at_most(2)
    return [
        IdentityDefinition(
            id="r-stirling-via-mixed",
            description="{n,k}_r = sum_i C(r,i) S(n-r,i+1,k-r)",
            kind=CaseKind.AS_STATED,
            axes=("n", "k", "r"),
            applies=lambda n, k, r: 1 <= r <= k <= n,
            lhs=lambda n, k, r: r_stirling(n, k, r),
            rhs=lambda n, k, r: r_stirling_via_mixed(n, k, r),
            tags=("r-stirling",),
        ),
        IdentityDefinition(
            id="worked-example-as-stated",
            description="S<=2(3,2,2) = 9 with every cell non-empty",
            kind=CaseKind.AS_STATED,
            axes=(),
            lhs=lambda: S(3, 2, 2, worked_band),
            rhs=lambda: 9,
            paired_with="worked-example-relaxed",
            note="The listed configurations leave a label-1 cell empty; with non-empty cells the count is 3.",
            expected_status=CaseStatus.FLAGGED,
            tags=("example", "errata"),
        ),
        IdentityDefinition(
            id="worked-example-relaxed",
            description="S<=2(3,2,2) = 9 when label-1 cells may be empty",
            kind=CaseKind.CORRECTED,
            axes=(),
            lhs=lambda: mixed_count_relaxed(3, CellSpec.relaxed((2, 1), labels=(1,)), worked_band),
            rhs=lambda: 9,
            paired_with="worked-example-as-stated",
            tags=("example",),
        ),
        IdentityDefinition(
            id="worked-example-oracle",
            description="Enumeration with label-1 cells allowed empty lists 9 configurations",
            kind=CaseKind.PROPERTY,
            axes=(),
            lhs=lambda: oracle(3, (2, 1), worked_band, relaxed_labels=(1,)),
            rhs=lambda: 9,
            tags=("example", "oracle"),
        ),
        IdentityDefinition(
            id="degenerate-single-label",
            description="S_band(n,1,r) = {n,r}_band",
            kind=CaseKind.PROPERTY,
            axes=("n", "r", "band"),
            lhs=lambda n, r, band: s_mixed(MixedParams(n=n, k=1, r=r, band=band), MixedAlgorithm.ELEMENT_RECURRENCE),
            rhs=lambda n, r, band: T(n, r, band),
            tags=("mixed",),
        ),
        IdentityDefinition(
            id="degenerate-no-label1",
            description="S_band(n,k,0) = (k-1)! {n,k-1}_band",
            kind=CaseKind.PROPERTY,
            axes=("n", "k", "band"),
            lhs=lambda n, k, band: s_mixed(MixedParams(n=n, k=k, r=0, band=band), MixedAlgorithm.ELEMENT_RECURRENCE),
            rhs=lambda n, k, band: factorial(k - 1) * T(n, k - 1, band),
            tags=("mixed",),
        ),
        IdentityDefinition(
            id="degenerate-one-label1",
            description="S_band(n,k,1) = k! {n,k}_band",
            kind=CaseKind.PROPERTY,
            axes=("n", "k", "band"),
            lhs=lambda n, k, band: s_mixed(MixedParams(n=n, k=k, r=1, band=band), MixedAlgorithm.ELEMENT_RECURRENCE),
            rhs=lambda n, k, band: factorial(k) * T(n, k, band),
            tags=("mixed",),
        ),
        IdentityDefinition(
            id="label-permutation-invariance",
            description="Mixed counts do not depend on the order of the labels",
            kind=CaseKind.PROPERTY,
            axes=("n", "counts", "band"),
            lhs=lambda n, counts, band: mixed_count_convolution(n, counts, band),
            rhs=lambda n, counts, band: mixed_count_convolution(n, tuple(reversed(counts)), band),
            tags=("mixed",),
        ),
    ]


def _oracle_cases() -> List[IdentityDefinition]:
    return [
        IdentityDefinition(
            id="oracle-agreement",
            description="Enumerated mixed partitions match S_band(n,k,r)",
            kind=CaseKind.PROPERTY,
            axes=("n_oracle", "k", "r", "band"),
            applies=lambda n, k, r, band: _has_cells(k=k, r=r),
            lhs=lambda n, k, r, band: oracle(n, mixed_counts(k, r), band),
            rhs=lambda n, k, r, band: S(n, k, r, band),
            tags=("oracle",),
        ),
        IdentityDefinition(
            id="oracle-agreement-stirling",
            description="Enumerated partitions match {n,k}_band",
            kind=CaseKind.PROPERTY,
            axes=("n_oracle", "k", "band"),
            lhs=lambda n, k, band: oracle(n, (k,), band),
            rhs=lambda n, k, band: T(n, k, band),
            tags=("oracle",),
        ),
        IdentityDefinition(
            id="oracle-agreement-r-stirling",
            description="Enumeration with 1..r forced apart matches the r-Stirling numbers",
            kind=CaseKind.PROPERTY,
            axes=("n_oracle", "k", "r"),
            applies=lambda n, k, r: r <= n,
            lhs=lambda n, k, r: oracle(n, (k,), prefix=r),
            rhs=lambda n, k, r: r_stirling(n, k, r),
            tags=("oracle", "r-stirling"),
        ),
        IdentityDefinition(
            id="oracle-agreement-relaxed",
            description="Enumeration with empty cells allowed matches the relaxed count",
            kind=CaseKind.PROPERTY,
            axes=("n_oracle", "counts", "band"),
            lhs=lambda n, counts, band: oracle(n, counts, band, relaxed_labels=()),
            rhs=lambda n, counts, band: mixed_count_relaxed(n, CellSpec.relaxed(counts), band),
            tags=("oracle",),
        ),
    ]


def _anchors() -> List[IdentityDefinition]:
    return [
        IdentityDefinition(
            id="anchor-a001710",
            description="S(t+1,t,2) = (t+1)!/2",
            kind=CaseKind.PROPERTY,
            axes=("t",),
            lhs=lambda t: S(t + 1, t, 2),
            rhs=lambda t: factorial(t + 1) // 2,
            tags=("anchor",),
        ),
        IdentityDefinition(
            id="anchor-a001715",
            description="S(t+2,t,3) = (t+2)!/6",
            kind=CaseKind.PROPERTY,
            axes=("t",),
            lhs=lambda t: S(t + 2, t, 3),
            rhs=lambda t: factorial(t + 2) // 6,
            tags=("anchor",),
        ),
        IdentityDefinition(
            id="anchor-a002411",
            description="S(t+2,2,t) = (t+1)^2 (t+2)/2",
            kind=CaseKind.PROPERTY,
            axes=("t",),
            lhs=lambda t: S(t + 2, 2, t),
            rhs=lambda t: (t + 1) ** 2 * (t + 2) // 2,
            tags=("anchor",),
        ),
        IdentityDefinition(
            id="anchor-a108650",
            description="S(t+3,2,t) = (t+1)^2 (t+2)(t+3)(3t+4)/24",
            kind=CaseKind.PROPERTY,
            axes=("t",),
            lhs=lambda t: S(t + 3, 2, t),
            rhs=lambda t: (t + 1) ** 2 * (t + 2) * (t + 3) * (3 * t + 4) // 24,
            tags=("anchor",),
        ),
        IdentityDefinition(
            id="anchor-a083374",
            description="S(t+3,3,t) = (t+2)^2 ((t+2)^2 - 1)/2",
            kind=CaseKind.PROPERTY,
            axes=("t",),
            lhs=lambda t: S(t + 3, 3, t),
            rhs=lambda t: (t + 2) ** 2 * ((t + 2) ** 2 - 1) // 2,
            tags=("anchor",),
        ),
    ]


def build_registry() -> IdentityRegistry:
    registry = IdentityRegistry()
    for group in (_classical, _bounded, _mixed, _splits, _egf, _r_stirling_and_examples,
                  _oracle_cases, _anchors):
        for case in group():
            registry.register(case)
    logger.debug(f"[HARNESS] registered {len(registry)} identities")
    return registry


@lru_cache(maxsize=1)
def default_registry() -> IdentityRegistry:
    return build_registry()
