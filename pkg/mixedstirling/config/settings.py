"""
mixedstirling - Configuration Settings
Oracle caps, default verification grid, harness workers, logging and API settings.
"""

import logging
from typing import List
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from mixedstirling import __version__

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Engine-wide settings, read from the environment and `.env`."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
        populate_by_name=True,
    )

    # ── Runtime ───────────────────────────────────────────────────────
    environment: str = Field(default="dev", alias="ENVIRONMENT")
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")
    engine_version: str = __version__

    # ── Partition Oracle ──────────────────────────────────────────────
    oracle_cap: int = Field(default=12, ge=1, alias="ORACLE_CAP")

    # ── Verification Harness ──────────────────────────────────────────
    grid_n_max: int = Field(default=10, ge=0, alias="GRID_N_MAX")
    grid_k_max: int = Field(default=5, ge=1, alias="GRID_K_MAX")
    grid_r_max: int = Field(default=5, ge=0, alias="GRID_R_MAX")
    grid_bands: str = Field(
        default="unbounded,<=2,<=3,<=4,>=2,>=3,2..3",
        alias="GRID_BANDS",
    )
    grid_m_values: str = Field(default="2,3,4", alias="GRID_M_VALUES")
    grid_ell_values: str = Field(default="1,2,3", alias="GRID_ELL_VALUES")
    harness_oracle_max_n: int = Field(default=7, ge=0, alias="HARNESS_ORACLE_MAX_N")
    harness_egf_max_n: int = Field(default=12, ge=0, alias="HARNESS_EGF_MAX_N")
    harness_workers: int = Field(default=1, ge=1, alias="HARNESS_WORKERS")
    max_counterexamples: int = Field(default=5, ge=1, alias="MAX_COUNTEREXAMPLES")

    # ── HTTP API ──────────────────────────────────────────────────────
    api_host: str = Field(default="127.0.0.1", alias="API_HOST")
    api_port: int = Field(default=8080, alias="API_PORT")
    api_max_n: int = Field(default=200, ge=1, alias="API_MAX_N")
    api_verify_max_n: int = Field(default=12, ge=0, alias="API_VERIFY_MAX_N")

    @field_validator("environment")
    @classmethod
    def validate_environment(cls, v: str) -> str:
        allowed = ["dev", "ci", "prod"]
        if v.lower() not in allowed:
            logger.warning(f"[SETTINGS] environment '{v}' not in {allowed}")
        return v.lower()

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
            raise ValueError(f"Unknown log level '{v}'")
        return level

    def band_labels(self) -> List[str]:
        return [b.strip() for b in self.grid_bands.split(",") if b.strip()]

    def m_values(self) -> List[int]:
        return [int(v) for v in self.grid_m_values.split(",") if v.strip()]

    def ell_values(self) -> List[int]:
        return [int(v) for v in self.grid_ell_values.split(",") if v.strip()]


settings = Settings()
