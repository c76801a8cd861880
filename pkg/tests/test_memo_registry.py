"""
Tests for the memo-table registry.
Run: pytest tests/test_memo_registry.py -v
"""
import threading

from mixedstirling.bounded import SizeBand
from mixedstirling.bounded.bounded_stirling import BoundedStirlingTable, band_table
from mixedstirling.cache import memo_registry


class TestMemoRegistry:

    def test_created_once(self, memo):
        calls = []

        def factory():
            calls.append(1)
            return object()

        a = memo.get_or_create("ns", 1, factory)
        b = memo.get_or_create("ns", 1, factory)
        assert a is b
        assert len(calls) == 1
        stats = memo.get_stats()
        assert stats["hits"] == 1 and stats["misses"] == 1
        assert stats["hit_rate"] == 0.5

    def test_keys_are_namespaced(self, memo):
        a = memo.get_or_create("a", 1, object)
        b = memo.get_or_create("b", 1, object)
        assert a is not b
        assert memo.namespaces() == ["a", "b"]

    def test_invalidate_namespace(self, memo):
        memo.get_or_create("a", 1, object)
        memo.get_or_create("a", 2, object)
        memo.get_or_create("b", 1, object)
        assert memo.invalidate_namespace("a") == 2
        assert memo.get("a", 1) is None
        assert memo.get("b", 1) is not None

    def test_invalidate_all(self, memo):
        memo.get_or_create("a", 1, object)
        assert memo.invalidate_all() == 1
        assert memo.get_stats()["tables"] == 0

    def test_empty_stats(self, memo):
        assert memo.get_stats()["hit_rate"] == 0.0

    def test_concurrent_creation_builds_one_table(self, memo):
        results = []
        barrier = threading.Barrier(8)

        def worker():
            barrier.wait()
            results.append(memo.get_or_create("band", "x", lambda: BoundedStirlingTable(SizeBand.at_most(2))))

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r is results[0] for r in results)
        assert memo.get_stats()["misses"] == 1

    def test_concurrent_counters_add_up(self, memo):
        barrier = threading.Barrier(8)

        def worker():
            barrier.wait()
            for _ in range(500):
                memo.get_or_create("ns", "shared", object)

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        stats = memo.get_stats()
        assert stats["misses"] == 1
        assert stats["hits"] + stats["misses"] == 8 * 500


class TestBandTables:

    def test_equal_bands_share_a_table(self):
        assert band_table(SizeBand.parse("<=3")) is band_table(SizeBand.at_most(3))
        assert "band" in memo_registry.namespaces()

    def test_snapshot_is_immutable(self):
        table = BoundedStirlingTable(SizeBand.at_least(2))
        table.ensure(5)
        snap = table.snapshot()
        table.ensure(8)
        assert len(snap) == 6
        assert table.max_n == 8
        assert snap[4] == table.row(4)
