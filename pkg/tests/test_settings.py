"""
Tests for engine settings.
Run: pytest tests/test_settings.py -v
"""
import pytest

from mixedstirling.config.settings import Settings


class TestSettings:

    def test_defaults(self):
        s = Settings(_env_file=None)
        assert s.oracle_cap == 12
        assert s.harness_oracle_max_n == 7
        assert s.api_max_n == 200 and s.api_verify_max_n == 12
        assert s.band_labels() == ["unbounded", "<=2", "<=3", "<=4", ">=2", ">=3", "2..3"]
        assert s.m_values() == [2, 3, 4]
        assert s.ell_values() == [1, 2, 3]

    def test_environment_variables(self, monkeypatch):
        monkeypatch.setenv("ORACLE_CAP", "9")
        monkeypatch.setenv("GRID_BANDS", "<=2, >=3")
        s = Settings(_env_file=None)
        assert s.oracle_cap == 9
        assert s.band_labels() == ["<=2", ">=3"]

    def test_log_level_normalised(self, monkeypatch):
        monkeypatch.setenv("LOG_LEVEL", "debug")
        assert Settings(_env_file=None).log_level == "DEBUG"

    def test_unknown_log_level_rejected(self, monkeypatch):
        monkeypatch.setenv("LOG_LEVEL", "chatty")
        with pytest.raises(ValueError):
            Settings(_env_file=None)

    def test_unknown_environment_lowercased(self, monkeypatch):
        monkeypatch.setenv("ENVIRONMENT", "Staging")
        assert Settings(_env_file=None).environment == "staging"

    def test_env_file(self, tmp_path):
        env = tmp_path / ".env"
        env.write_text("GRID_N_MAX=4\nHARNESS_WORKERS=3\n")
        s = Settings(_env_file=env)
        assert s.grid_n_max == 4
        assert s.harness_workers == 3
