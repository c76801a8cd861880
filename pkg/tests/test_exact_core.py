"""
Tests for the exact core: binomials, Stirling triangles, Bell and r-Stirling numbers.
Run: pytest tests/test_exact_core.py -v
"""
import threading

import pytest
from hypothesis import given, strategies as st

from mixedstirling.exact_core import (
    StirlingTable, bell, binomial, factorial, multinomial, r_stirling,
    stirling2, stirling2_explicit, stirling2_howard, stirling_row,
)


# ── Arithmetic ───────────────────────────────────────────────────


class TestArithmetic:

    def test_factorial(self):
        assert factorial(0) == 1
        assert factorial(10) == 3628800

    def test_factorial_negative_rejected(self):
        with pytest.raises(ValueError):
            factorial(-1)

    def test_factorial_cache_is_bounded(self):
        assert factorial.cache_info().maxsize == 1024

    def test_binomial(self):
        assert binomial(5, 2) == 10
        assert binomial(3, 5) == 0
        assert binomial(0, 0) == 1

    def test_binomial_negative_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)

    def test_multinomial(self):
        assert multinomial(4, (2, 1, 1)) == 12
        assert multinomial(0, ()) == 1
        assert multinomial(3, (0, 3)) == 1

    def test_multinomial_parts_must_sum_to_n(self):
        with pytest.raises(ValueError):
            multinomial(4, (2, 1))

    def test_big_integers_stay_exact(self):
        assert binomial(200, 100) == factorial(200) // (factorial(100) ** 2)

    @given(st.integers(min_value=0, max_value=60), st.integers(min_value=0, max_value=60))
    def test_binomial_symmetry(self, n, k):
        if k <= n:
            assert binomial(n, k) == binomial(n, n - k)


# ── Stirling Numbers ─────────────────────────────────────────────


class TestStirling:

    def test_known_values(self):
        assert stirling2(5, 2) == 15
        assert stirling2(5, 3) == 25
        assert stirling2(6, 3) == 90
        assert stirling2(10, 5) == 42525

    def test_boundary_values(self):
        assert stirling2(0, 0) == 1
        assert stirling2(3, 0) == 0
        assert stirling2(3, 5) == 0
        assert stirling2(7, 7) == 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            stirling2(-1, 0)

    def test_row(self):
        assert stirling_row(4) == (0, 1, 7, 6, 1)

    @given(st.integers(min_value=0, max_value=14), st.integers(min_value=0, max_value=14))
    def test_three_algorithms_agree(self, n, k):
        expected = stirling2(n, k)
        assert stirling2_explicit(n, k) == expected
        assert stirling2_howard(n, k) == expected

    def test_large_value_exact(self):
        # {n brace 2} = 2^(n-1) - 1
        assert stirling2(120, 2) == 2 ** 119 - 1

    def test_concurrent_growth_is_consistent(self):
        table = StirlingTable()
        results = []

        def grow():
            results.append(table.entry(60, 30))

        threads = [threading.Thread(target=grow) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert len(set(results)) == 1
        assert results[0] == stirling2(60, 30)
        assert table.max_n == 60


# ── Bell and r-Stirling ──────────────────────────────────────────


class TestBellAndRStirling:

    def test_bell(self):
        assert [bell(n) for n in range(9)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140]

    def test_bell_is_row_sum(self):
        assert bell(10) == sum(stirling_row(10)) == 115975

    def test_r_stirling_values(self):
        assert r_stirling(4, 2, 2) == 4
        assert r_stirling(4, 3, 2) == 5
        assert r_stirling(5, 3, 2) == 19

    def test_r_stirling_reduces_to_stirling(self):
        for n in range(1, 9):
            for k in range(n + 1):
                assert r_stirling(n, k, 1) == stirling2(n, k)
                assert r_stirling(n, k, 0) == stirling2(n, k)

    def test_r_stirling_needs_n_at_least_r(self):
        with pytest.raises(ValueError):
            r_stirling(2, 3, 3)
