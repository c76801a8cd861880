"""
Verification grid: the parameter ranges every identity is evaluated over.
Defaults come from settings; a grid can also be read from a YAML file.
"""

import itertools
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from mixedstirling.bounded.size_band import SizeBand
from mixedstirling.config import settings

logger = logging.getLogger(__name__)

# axes whose values are passed to identities under another parameter name
AXIS_PARAMS: Dict[str, str] = {"n_oracle": "n", "n_egf": "n"}

# cell specs (counts per label) for the identities over general mixed partitions
DEFAULT_COUNT_SPECS: Tuple[Tuple[int, ...], ...] = (
    (1,), (2,), (3,), (1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (1, 1, 1), (2, 1, 1), (0, 2, 1),
)


class VerificationGrid(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_max: int = Field(default_factory=lambda: settings.grid_n_max, ge=0)
    k_max: int = Field(default_factory=lambda: settings.grid_k_max, ge=1)
    r_max: int = Field(default_factory=lambda: settings.grid_r_max, ge=0)
    bands: Tuple[str, ...] = Field(default_factory=lambda: tuple(settings.band_labels()))
    m_values: Tuple[int, ...] = Field(default_factory=lambda: tuple(settings.m_values()))
    ell_values: Tuple[int, ...] = Field(default_factory=lambda: tuple(settings.ell_values()))
    oracle_max_n: int = Field(default_factory=lambda: settings.harness_oracle_max_n, ge=0)
    egf_max_n: int = Field(default_factory=lambda: settings.harness_egf_max_n, ge=0)
    anchor_max: int = Field(default=10, ge=1)
    count_specs: Tuple[Tuple[int, ...], ...] = DEFAULT_COUNT_SPECS

    @field_validator("bands")
    @classmethod
    def _bands_parse(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        # normalise to canonical labels so equal grids hash equally
        return tuple(SizeBand.parse(b).label for b in v)

    @field_validator("oracle_max_n")
    @classmethod
    def _oracle_under_cap(cls, v: int) -> int:
        if v > settings.oracle_cap:
            raise ValueError(f"oracle_max_n {v} exceeds the oracle cap {settings.oracle_cap}")
        return v

    @classmethod
    def from_yaml(cls, path: Union[str, Path]) -> "VerificationGrid":
        with open(path, encoding="utf-8") as fh:
            data = yaml.safe_load(fh) or {}
        if not isinstance(data, dict):
            raise ValueError(f"grid file {path} must hold a mapping, got {type(data).__name__}")
        grid = cls(**data.get("grid", data))
        logger.info(f"[HARNESS] grid loaded from {path}: {grid.describe()}")
        return grid

    def size_bands(self) -> List[SizeBand]:
        return [SizeBand.parse(b) for b in self.bands]

    def axis_values(self, axis: str) -> List[Any]:
        ranges: Dict[str, Iterable[Any]] = {
            "n": range(self.n_max + 1),
            "k": range(1, self.k_max + 1),
            "r": range(self.r_max + 1),
            "s": range(max(self.r_max, self.k_max) + 1),
            "band": self.size_bands(),
            "m": self.m_values,
            "ell": self.ell_values,
            "n_oracle": range(min(self.oracle_max_n, self.n_max) + 1),
            "n_egf": range(self.egf_max_n + 1),
            "t": range(1, self.anchor_max + 1),
            "counts": self.count_specs,
        }
        if axis not in ranges:
            raise ValueError(f"Unknown grid axis '{axis}'")
        return list(ranges[axis])

    def points(self, axes: Iterable[str]) -> List[Dict[str, Any]]:
        """Cartesian product of the named axes, as keyword-argument dicts."""
        axes = tuple(axes)
        names = [AXIS_PARAMS.get(a, a) for a in axes]
        if len(set(names)) != len(names):
            raise ValueError(f"axes {axes} map to repeated parameters")
        values = [self.axis_values(a) for a in axes]
        return [dict(zip(names, combo)) for combo in itertools.product(*values)]

    def describe(self) -> Dict[str, Any]:
        return self.model_dump(mode="json")
