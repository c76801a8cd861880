"""
Brute-force enumeration of set partitions into labeled cells.

Set partitions of [n] are generated as restricted growth strings (each element
joins an earlier block or opens the next one, so blocks come out ordered by
their minimum and no partition repeats). Each partition then gets every
admissible assignment of its blocks to labels. Cells sharing a label are
interchangeable, so a configuration records per label the set of blocks it
received.

This is the reference every recurrence and identity in the package is checked
against; it is slow on purpose and capped.
"""

import logging
from functools import lru_cache
from typing import Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mixedstirling.bounded.size_band import SizeBand
from mixedstirling.config import settings
from mixedstirling.mixed.cells import CellSpec

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]
Configuration = Tuple[Tuple[Block, ...], ...]


class OracleQuery(BaseModel):
    """One enumeration request: n elements into the cells of spec, sizes in band."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    spec: CellSpec
    band: SizeBand = Field(default_factory=SizeBand.unbounded)
    distinct_prefix: int = Field(default=0, ge=0)
    cap: int = Field(default_factory=lambda: settings.oracle_cap, ge=0)
    allow_over_cap: bool = False

    @model_validator(mode="after")
    def _check(self) -> "OracleQuery":
        if self.n > self.cap and not self.allow_over_cap:
            raise ValueError(
                f"n={self.n} exceeds the oracle cap {self.cap}; pass allow_over_cap to force it"
            )
        if self.distinct_prefix > self.n:
            raise ValueError(f"distinct_prefix {self.distinct_prefix} exceeds n={self.n}")
        return self

    @property
    def min_blocks(self) -> int:
        return sum(c for i, c in enumerate(self.spec.counts) if not self.spec.may_be_empty(i))

    @property
    def max_blocks(self) -> int:
        return self.spec.total_cells


def _set_partitions(q: OracleQuery) -> Iterator[Tuple[Block, ...]]:
    n, band = q.n, q.band
    min_blocks, max_blocks = q.min_blocks, q.max_blocks
    blocks: List[List[int]] = []

    def place(e: int) -> Iterator[Tuple[Block, ...]]:
        remaining = n - e + 1
        if remaining == 0:
            if len(blocks) >= min_blocks and all(band.allows(len(b)) for b in blocks):
                yield tuple(tuple(b) for b in blocks)
            return
        if sum(max(0, band.lo - len(b)) for b in blocks) > remaining:
            return
        if len(blocks) + remaining < min_blocks:
            return
        if e > q.distinct_prefix:
            for b in blocks:
                if band.hi is None or len(b) < band.hi:
                    b.append(e)
                    yield from place(e + 1)
                    b.pop()
        if len(blocks) < max_blocks:
            blocks.append([e])
            yield from place(e + 1)
            blocks.pop()

    yield from place(1)


def _label_assignments(blocks: Tuple[Block, ...], spec: CellSpec) -> Iterator[Configuration]:
    groups: List[List[Block]] = [[] for _ in spec.counts]

    def assign(idx: int) -> Iterator[Configuration]:
        missing = sum(
            c - len(groups[i])
            for i, c in enumerate(spec.counts)
            if not spec.may_be_empty(i)
        )
        if missing > len(blocks) - idx:
            return
        if idx == len(blocks):
            yield tuple(tuple(g) for g in groups)
            return
        for i, c in enumerate(spec.counts):
            if len(groups[i]) < c:
                groups[i].append(blocks[idx])
                yield from assign(idx + 1)
                groups[i].pop()

    yield from assign(0)


def oracle_enumerate(q: OracleQuery) -> Iterator[Configuration]:
    """
    Every configuration exactly once, in a deterministic order.

    A configuration is a tuple over labels; entry i lists the blocks carrying
    label i + 1, each block a sorted tuple of elements, blocks ordered by minimum.
    """
    for blocks in _set_partitions(q):
        yield from _label_assignments(blocks, q.spec)


def oracle_count(q: OracleQuery) -> int:
    count = sum(1 for _ in oracle_enumerate(q))
    logger.debug(
        f"[ORACLE] n={q.n} counts={q.spec.counts} band={q.band} "
        f"prefix={q.distinct_prefix} -> {count}"
    )
    return count


@lru_cache(maxsize=4096)
def oracle_count_cached(q: OracleQuery) -> int:
    return oracle_count(q)
