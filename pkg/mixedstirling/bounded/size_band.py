"""
Block-size constraints.
A SizeBand bounds the size of every block of a partition: lo <= size <= hi,
with hi = None meaning no upper bound.
"""

import re
from typing import Optional
from pydantic import BaseModel, ConfigDict, Field, model_validator


_LE = re.compile(r"^<=\s*(\d+)$")
_GE = re.compile(r"^>=\s*(\d+)$")
_RANGE = re.compile(r"^(\d+)\s*\.\.\s*(\d+|inf)$")


class SizeBand(BaseModel):
    """Per-block size interval [lo, hi]."""
    model_config = ConfigDict(frozen=True)

    lo: int = Field(default=1, ge=1)
    hi: Optional[int] = Field(default=None, ge=1)

    @model_validator(mode="after")
    def _check_order(self) -> "SizeBand":
        if self.hi is not None and self.hi < self.lo:
            raise ValueError(f"band upper bound {self.hi} below lower bound {self.lo}")
        return self

    # ── Constructors ──────────────────────────────────────────────────

    @classmethod
    def unbounded(cls) -> "SizeBand":
        return cls()

    @classmethod
    def at_most(cls, m: int) -> "SizeBand":
        return cls(lo=1, hi=m)

    @classmethod
    def at_least(cls, ell: int) -> "SizeBand":
        return cls(lo=ell)

    @classmethod
    def between(cls, ell: int, m: int) -> "SizeBand":
        return cls(lo=ell, hi=m)

    @classmethod
    def parse(cls, text: str) -> "SizeBand":
        """Accepts 'unbounded' / 'inf', '<=m', '>=l' and 'l..m' (or 'l..inf')."""
        t = text.strip().lower()
        if t in ("", "unbounded", "inf", "any"):
            return cls.unbounded()
        if m := _LE.match(t):
            return cls.at_most(int(m.group(1)))
        if m := _GE.match(t):
            return cls.at_least(int(m.group(1)))
        if m := _RANGE.match(t):
            hi = None if m.group(2) == "inf" else int(m.group(2))
            return cls(lo=int(m.group(1)), hi=hi)
        raise ValueError(f"Cannot parse size band '{text}'")

    # ── Queries ───────────────────────────────────────────────────────

    @property
    def is_bounded(self) -> bool:
        return self.hi is not None

    @property
    def is_restricted(self) -> bool:
        """Only an upper bound (lo = 1)."""
        return self.lo == 1

    @property
    def is_associated(self) -> bool:
        """Only a lower bound (hi unbounded)."""
        return self.hi is None

    @property
    def label(self) -> str:
        if self.lo == 1 and self.hi is None:
            return "unbounded"
        if self.lo == 1:
            return f"<={self.hi}"
        if self.hi is None:
            return f">={self.lo}"
        return f"{self.lo}..{self.hi}"

    def allows(self, size: int) -> bool:
        return size >= self.lo and (self.hi is None or size <= self.hi)

    def sizes(self, limit: int) -> range:
        """Allowed sizes not exceeding limit."""
        top = limit if self.hi is None else min(self.hi, limit)
        return range(self.lo, top + 1)

    def supports(self, n: int, k: int) -> bool:
        """Whether n elements can fill exactly k blocks of allowed sizes."""
        if n < k * self.lo:
            return False
        return self.hi is None or n <= k * self.hi

    def __str__(self) -> str:
        return self.label
