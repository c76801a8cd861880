"""
Tests for the brute-force partition oracle.
Run: pytest tests/test_oracle.py -v
"""
import pytest

from mixedstirling.bounded import SizeBand, stirling_in_band
from mixedstirling.exact_core import r_stirling
from mixedstirling.mixed import CellSpec, MixedParams, mixed_count_relaxed, s_value
from mixedstirling.oracle import OracleQuery, oracle_count, oracle_count_cached, oracle_enumerate


def _query(n, counts, band=None, relaxed=None, prefix=0, **kw):
    spec = CellSpec.strict(counts) if relaxed is None else CellSpec.relaxed(counts, relaxed)
    return OracleQuery(n=n, spec=spec, band=band or SizeBand.unbounded(), distinct_prefix=prefix, **kw)


# ── Queries ──────────────────────────────────────────────────────


class TestOracleQuery:

    def test_cap_enforced(self):
        with pytest.raises(ValueError):
            _query(13, (2,), cap=12)

    def test_cap_override(self):
        q = _query(5, (2,), cap=3, allow_over_cap=True)
        assert oracle_count(q) == 15

    def test_prefix_cannot_exceed_n(self):
        with pytest.raises(ValueError):
            _query(3, (3,), prefix=4)

    def test_block_bounds(self):
        q = _query(4, (2, 1), relaxed=(1,))
        assert q.min_blocks == 1
        assert q.max_blocks == 3


# ── Enumeration ──────────────────────────────────────────────────


class TestOracleEnumeration:

    def test_worked_example_lists_nine(self):
        configs = list(oracle_enumerate(_query(3, (2, 1), SizeBand.at_most(2), relaxed=(1,))))
        assert len(configs) == 9
        assert len(set(configs)) == 9

    def test_worked_example_strict_reading(self):
        assert oracle_count(_query(3, (2, 1), SizeBand.at_most(2))) == 3

    def test_configurations_partition_the_ground_set(self):
        for config in oracle_enumerate(_query(5, (2, 1), SizeBand.at_most(3))):
            elements = sorted(e for blocks in config for block in blocks for e in block)
            assert elements == [1, 2, 3, 4, 5]
            assert len(config[0]) == 2 and len(config[1]) == 1
            assert all(1 <= len(b) <= 3 for blocks in config for b in blocks)

    def test_configuration_shape(self):
        configs = list(oracle_enumerate(_query(2, (1, 1))))
        assert configs == [(((1,),), ((2,),)), (((2,),), ((1,),))]

    def test_relaxed_single_label(self):
        assert oracle_count(_query(2, (2,), relaxed=())) == 2

    def test_empty_ground_set(self):
        assert oracle_count(_query(0, (1,), relaxed=())) == 1
        assert oracle_count(_query(0, (1,))) == 0


# ── Agreement ────────────────────────────────────────────────────


class TestOracleAgreement:

    @pytest.mark.parametrize("band", [
        SizeBand.unbounded(), SizeBand.at_most(2), SizeBand.at_least(2), SizeBand.between(2, 3),
    ])
    def test_mixed_numbers(self, band):
        for n in range(7):
            for k in range(1, 4):
                for r in range(0, 4):
                    if k + r - 1 < 1:
                        continue
                    spec = MixedParams(n=n, k=k, r=r).cell_spec()
                    q = OracleQuery(n=n, spec=spec, band=band)
                    assert oracle_count(q) == s_value(n, k, r, band), (n, k, r, band.label)

    def test_stirling_in_band(self):
        for band in (SizeBand.at_most(3), SizeBand.at_least(3)):
            for n in range(8):
                for k in range(1, 5):
                    assert oracle_count(_query(n, (k,), band)) == stirling_in_band(n, k, band)

    def test_distinct_prefix_gives_r_stirling(self):
        for n in range(1, 7):
            for k in range(1, n + 1):
                for r in range(0, min(k, n) + 1):
                    assert oracle_count(_query(n, (k,), prefix=r)) == r_stirling(n, k, r)

    def test_relaxed_counts(self):
        band = SizeBand.at_most(2)
        for counts in [(2, 1), (1, 2), (0, 2, 1), (3,)]:
            spec = CellSpec.relaxed(counts)
            for n in range(6):
                assert oracle_count(OracleQuery(n=n, spec=spec, band=band)) == mixed_count_relaxed(n, spec, band)

    def test_cached_count(self):
        q = _query(5, (2, 1))
        assert oracle_count_cached(q) == oracle_count(q)
        assert oracle_count_cached(q) == oracle_count_cached(_query(5, (2, 1)))
