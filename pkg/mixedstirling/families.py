"""
Named counting families, shared by the CLI and the HTTP API.

A FamilyQuery names a family and its parameters; compute_family evaluates one
value and family_table a grid of them (n against k at fixed r, or n against r
at fixed k).
"""

import logging
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from mixedstirling.bounded import SizeBand, bell_le, stirling_ge, stirling_in_band, stirling_le
from mixedstirling.exact_core import bell, r_stirling, stirling2
from mixedstirling.mixed import (
    CellSpec, MixedAlgorithm, MixedParams, mixed_bell, mixed_count,
    r_stirling_via_mixed, s_mixed, s_mixed_all,
)

logger = logging.getLogger(__name__)

ALL_ALGORITHMS = "all"


class Family(str, Enum):
    STIRLING2 = "stirling2"
    BELL = "bell"
    R_STIRLING = "r-stirling"
    RESTRICTED = "restricted"
    ASSOCIATED = "associated"
    BAND = "band"
    BELL_RESTRICTED = "bell-restricted"
    MIXED = "mixed"
    MIXED_COUNT = "mixed-count"
    MIXED_BELL = "mixed-bell"
    R_STIRLING_VIA_MIXED = "r-stirling-via-mixed"


class FamilyQuery(BaseModel):
    """
    One value request. `band` covers the band family and mixed numbers; the
    restricted families read their bound from band.hi, the associated family from
    band.lo.
    """
    model_config = ConfigDict(frozen=True)

    family: Family
    n: int = Field(ge=0)
    k: int = Field(default=1, ge=0)
    r: int = Field(default=0, ge=0)
    band: SizeBand = Field(default_factory=SizeBand.unbounded)
    counts: Tuple[int, ...] = ()
    algorithm: str = MixedAlgorithm.CLOSED_FORM.value

    @field_validator("algorithm")
    @classmethod
    def _known_algorithm(cls, v: str) -> str:
        if v != ALL_ALGORITHMS:
            MixedAlgorithm(v)
        return v

    def with_index(self, **changes: int) -> "FamilyQuery":
        return self.model_copy(update=changes)


def _require_hi(q: FamilyQuery) -> int:
    if q.band.hi is None:
        raise ValueError(f"family '{q.family.value}' needs an upper block-size bound")
    return q.band.hi


def _mixed(q: FamilyQuery) -> int:
    if q.k < 1:
        return 0
    algorithm = MixedAlgorithm(q.algorithm)
    return s_mixed(MixedParams(n=q.n, k=q.k, r=q.r, band=q.band), algorithm)


def _mixed_count(q: FamilyQuery) -> int:
    if not q.counts:
        raise ValueError("family 'mixed-count' needs cell counts")
    return mixed_count(q.n, CellSpec.strict(q.counts), q.band)


def _r_stirling(q: FamilyQuery) -> int:
    return r_stirling(q.n, q.k, q.r) if q.n >= q.r else 0


def _r_stirling_via_mixed(q: FamilyQuery) -> int:
    return r_stirling_via_mixed(q.n, q.k, q.r) if q.r <= q.k <= q.n else 0


_FAMILIES: Dict[Family, Callable[[FamilyQuery], int]] = {
    Family.STIRLING2: lambda q: stirling2(q.n, q.k),
    Family.BELL: lambda q: bell(q.n),
    Family.R_STIRLING: _r_stirling,
    Family.RESTRICTED: lambda q: stirling_le(q.n, q.k, _require_hi(q)),
    Family.ASSOCIATED: lambda q: stirling_ge(q.n, q.k, q.band.lo),
    Family.BAND: lambda q: stirling_in_band(q.n, q.k, q.band),
    Family.BELL_RESTRICTED: lambda q: bell_le(q.n, _require_hi(q)),
    Family.MIXED: _mixed,
    Family.MIXED_COUNT: _mixed_count,
    Family.MIXED_BELL: lambda q: mixed_bell(q.n, max(q.k, 1), q.r),
    Family.R_STIRLING_VIA_MIXED: _r_stirling_via_mixed,
}


def compute_family(q: FamilyQuery) -> Union[int, Dict[str, int]]:
    """
    The family's value at q. For the mixed family with algorithm 'all' the result
    is every algorithm's value keyed by name; ArithmeticError if they disagree.
    """
    if q.family == Family.MIXED and q.algorithm == ALL_ALGORITHMS:
        if q.k < 1:
            return {alg.value: 0 for alg in MixedAlgorithm}
        values = s_mixed_all(MixedParams(n=q.n, k=q.k, r=q.r, band=q.band))
        if len(set(values.values())) != 1:
            logger.error(f"[MIXED] algorithms disagree at {q.model_dump(mode='json')}: {values}")
            raise ArithmeticError(f"mixed algorithms disagree: {values}")
        return values
    return _FAMILIES[q.family](q)


def parse_range(text: str) -> List[int]:
    """'5', '3..7' or '1,2,4' as a list of integers."""
    t = text.strip()
    if ".." in t:
        lo, hi = t.split("..", 1)
        a, b = int(lo), int(hi)
        if b < a:
            raise ValueError(f"empty range '{text}'")
        return list(range(a, b + 1))
    return [int(v) for v in t.split(",") if v.strip()]


def family_table(
    base: FamilyQuery,
    n_values: List[int],
    k_values: Optional[List[int]] = None,
    r_values: Optional[List[int]] = None,
) -> Tuple[Tuple[str, str], List[Tuple[int, int, int]]]:
    """
    Rows (n, column index, value). Varying r needs a single k and gives columns
    ('n', 'r'); otherwise the columns are ('n', 'k') at base.r (or the single r).
    """
    k_values = k_values or [base.k]
    r_values = r_values or [base.r]
    if len(r_values) > 1 and len(k_values) > 1:
        raise ValueError("a table varies k or r, not both")
    if base.algorithm == ALL_ALGORITHMS:
        base = base.model_copy(update={"algorithm": MixedAlgorithm.CLOSED_FORM.value})

    rows: List[Tuple[int, int, int]] = []
    if len(r_values) > 1:
        for n in n_values:
            for r in r_values:
                rows.append((n, r, _FAMILIES[base.family](base.with_index(n=n, k=k_values[0], r=r))))
        return ("n", "r"), rows
    for n in n_values:
        for k in k_values:
            rows.append((n, k, _FAMILIES[base.family](base.with_index(n=n, k=k, r=r_values[0]))))
    return ("n", "k"), rows
