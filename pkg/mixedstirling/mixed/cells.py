"""
Cell specifications for mixed partitions.

A CellSpec lists how many cells carry each label (cells sharing a label are
indistinguishable) and whether a label's cells must all be non-empty.
MixedParams is the special setting with r cells labeled 1 and one cell for each
of the labels 2..k.
"""

from enum import Enum
from typing import Iterable, Sequence, Tuple
from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator

from mixedstirling.bounded.size_band import SizeBand


class EmptyPolicy(str, Enum):
    NONEMPTY = "nonempty"
    MAY_BE_EMPTY = "may_be_empty"


class MixedAlgorithm(str, Enum):
    CLOSED_FORM = "closed_form"
    CONVOLUTION = "convolution"
    ELEMENT_RECURRENCE = "element_recurrence"
    THREE_CASE = "three_case"


class CellSpec(BaseModel):
    """Multiset of labeled cells: counts[i] cells carry label i + 1."""
    model_config = ConfigDict(frozen=True)

    counts: Tuple[int, ...]
    empty_policy: Tuple[EmptyPolicy, ...] = Field(default=(), validate_default=True)

    @field_validator("empty_policy")
    @classmethod
    def _default_policy(cls, v: Tuple[EmptyPolicy, ...], info: ValidationInfo) -> Tuple[EmptyPolicy, ...]:
        if v:
            return v
        return tuple(EmptyPolicy.NONEMPTY for _ in info.data.get("counts", ()))

    @model_validator(mode="after")
    def _check(self) -> "CellSpec":
        if len(self.counts) < 1:
            raise ValueError("a cell spec needs at least one label")
        if any(c < 0 for c in self.counts):
            raise ValueError(f"cell counts must be non-negative: {self.counts}")
        if len(self.empty_policy) != len(self.counts):
            raise ValueError(
                f"{len(self.empty_policy)} policies for {len(self.counts)} labels"
            )
        if self.all_nonempty and self.total_cells < 1:
            raise ValueError("a spec with only non-empty labels needs at least one cell")
        return self

    @classmethod
    def strict(cls, counts: Iterable[int]) -> "CellSpec":
        return cls(counts=tuple(counts))

    @classmethod
    def relaxed(cls, counts: Iterable[int], labels: Iterable[int] = ()) -> "CellSpec":
        """Cells of the given 1-based labels may be empty; all labels when none given."""
        counts = tuple(counts)
        chosen = set(labels) or set(range(1, len(counts) + 1))
        bad = [lab for lab in chosen if not 1 <= lab <= len(counts)]
        if bad:
            raise ValueError(f"labels {bad} outside 1..{len(counts)}")
        policy = tuple(
            EmptyPolicy.MAY_BE_EMPTY if i + 1 in chosen else EmptyPolicy.NONEMPTY
            for i in range(len(counts))
        )
        return cls(counts=counts, empty_policy=policy)

    @property
    def k(self) -> int:
        return len(self.counts)

    @property
    def total_cells(self) -> int:
        return sum(self.counts)

    @property
    def all_nonempty(self) -> bool:
        return all(p == EmptyPolicy.NONEMPTY for p in self.empty_policy)

    def may_be_empty(self, label_index: int) -> bool:
        return self.empty_policy[label_index] == EmptyPolicy.MAY_BE_EMPTY

    def permuted(self, order: Sequence[int]) -> "CellSpec":
        """Relabel: new label i is old label order[i] (0-based)."""
        if sorted(order) != list(range(self.k)):
            raise ValueError(f"{list(order)} is not a permutation of 0..{self.k - 1}")
        return CellSpec(
            counts=tuple(self.counts[i] for i in order),
            empty_policy=tuple(self.empty_policy[i] for i in order),
        )


class MixedParams(BaseModel):
    """S_band(n, k, r): r cells labeled 1 plus k-1 distinguishable cells."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=0)
    k: int = Field(ge=1)
    r: int = Field(ge=0)
    band: SizeBand = Field(default_factory=SizeBand.unbounded)

    def cell_spec(self) -> CellSpec:
        return CellSpec.strict((self.r,) + (1,) * (self.k - 1))
