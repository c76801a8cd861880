"""
Verification Harness - data models.
An identity is a pair of closures over a parameter point; evaluating it over a
grid yields a CaseResult with counterexamples for every point where the two
sides differ.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

Value = Union[int, Fraction]
Rendered = Union[int, str]


class CaseKind(str, Enum):
    AS_STATED = "as_stated"
    CORRECTED = "corrected"
    PROPERTY = "property"


class CaseStatus(str, Enum):
    PASS = "pass"
    FLAGGED = "flagged"
    ERROR = "error"
    SKIPPED = "skipped"


class IdentityDefinition(BaseModel):
    """
    A registered identity.

    `axes` name the grid axes the identity ranges over; lhs, rhs and applies are
    called with one keyword argument per axis (see grid.AXIS_PARAMS for axes that
    share a parameter name).
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    description: str
    kind: CaseKind
    axes: Tuple[str, ...]
    lhs: Callable[..., Value]
    rhs: Callable[..., Value]
    applies: Optional[Callable[..., bool]] = None
    paired_with: Optional[str] = None
    note: str = ""
    expected_status: CaseStatus = CaseStatus.PASS
    tags: Tuple[str, ...] = ()


def render_value(v: Any) -> Rendered:
    """Exact values for reports: integers stay ints, other rationals become 'p/q'."""
    if isinstance(v, Fraction):
        return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        return int(v)
    if isinstance(v, int):
        return v
    return str(v)


class Counterexample(BaseModel):
    params: Dict[str, Rendered]
    lhs: Rendered
    rhs: Rendered


class CaseResult(BaseModel):
    id: str
    description: str = ""
    kind: CaseKind
    status: CaseStatus
    expected_status: CaseStatus = CaseStatus.PASS
    points_checked: int = 0
    failures: int = 0
    counterexamples: List[Counterexample] = Field(default_factory=list)
    errors: List[str] = Field(default_factory=list)
    paired_with: Optional[str] = None
    note: str = ""

    @property
    def as_expected(self) -> bool:
        return self.status == self.expected_status
