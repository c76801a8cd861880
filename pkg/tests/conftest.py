"""
Shared fixtures for the mixedstirling test suite.
"""
import sys
import os
import pytest

# Ensure project root is on sys.path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

# Set env vars before any imports that read them
os.environ["ENVIRONMENT"] = "ci"
os.environ.setdefault("LOG_LEVEL", "WARNING")


# Published values of S(n, k, r), keyed by (n, k, r).
TABLE_R2 = {
    2: [1],
    3: [3, 3],
    4: [7, 18, 12],
    5: [15, 75, 120, 60],
    6: [31, 270, 780, 900, 360],
}
TABLE_R3 = {
    3: [1],
    4: [6, 4],
    5: [25, 40, 20],
    6: [90, 260, 300, 120],
    7: [301, 1400, 2800, 2520, 840],
}
TABLE_K2 = {
    2: [2],
    3: [6, 3],
    4: [14, 18, 4],
    5: [30, 75, 40, 5],
    6: [62, 270, 260, 75, 6],
}
TABLE_K3 = {
    3: [6],
    4: [36, 12],
    5: [150, 120, 20],
    6: [540, 780, 300, 30],
    7: [1806, 4200, 2800, 630, 42],
}


def _flatten():
    values = {}
    for n, row in TABLE_R2.items():
        for k, v in enumerate(row, start=1):
            values[(n, k, 2)] = v
    for n, row in TABLE_R3.items():
        for k, v in enumerate(row, start=1):
            values[(n, k, 3)] = v
    for n, row in TABLE_K2.items():
        for r, v in enumerate(row, start=1):
            values[(n, 2, r)] = v
    for n, row in TABLE_K3.items():
        for r, v in enumerate(row, start=1):
            values[(n, 3, r)] = v
    return values


PUBLISHED_VALUES = _flatten()


@pytest.fixture
def published_values():
    """Every published S(n, k, r) value, keyed by (n, k, r)."""
    return dict(PUBLISHED_VALUES)


@pytest.fixture
def small_grid():
    """A grid small enough for per-test harness runs."""
    from mixedstirling.harness import VerificationGrid
    return VerificationGrid(
        n_max=6, k_max=3, r_max=3,
        bands=("unbounded", "<=2", ">=2"),
        m_values=(2, 3), ell_values=(1, 2),
        oracle_max_n=5, egf_max_n=8, anchor_max=6,
    )


@pytest.fixture
def identity_registry():
    """Fresh IdentityRegistry with every identity registered."""
    from mixedstirling.harness import build_registry
    return build_registry()


@pytest.fixture
def memo():
    """Fresh MemoRegistry instance, independent of the process-wide one."""
    from mixedstirling.cache.memo_registry import MemoRegistry
    return MemoRegistry()
