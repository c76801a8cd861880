"""
Process-wide registry of memo tables.
Each table (classic Stirling triangle, r-Stirling triangles, band triangles) is
created once per (namespace, key) and shared by every caller in the process.

Tables are append-only and grow under their own lock, so handing the same
instance to several threads is safe.
"""

import logging
import threading
from typing import Any, Callable, Dict, Hashable, List, Tuple, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")


class MemoRegistry:
    """
    Namespaced store of memo tables with hit/miss accounting.

    Usage:
        table = memo_registry.get_or_create("band", band, lambda: BoundedStirlingTable(band))
        memo_registry.invalidate_namespace("band")
    """

    def __init__(self):
        self._tables: Dict[Tuple[str, Hashable], Any] = {}
        self._lock = threading.Lock()
        self._hits = 0
        self._misses = 0

    # ── Core Operations ──────────────────────────────────────────

    def get_or_create(self, namespace: str, key: Hashable, factory: Callable[[], T]) -> T:
        """Return the table stored under (namespace, key), building it on first use."""
        ck = (namespace, key)
        with self._lock:
            table = self._tables.get(ck)
            if table is None:
                table = factory()
                self._tables[ck] = table
                self._misses += 1
                logger.debug(f"[MEMO] created table {namespace}:{key!r}")
            else:
                self._hits += 1
        return table

    def get(self, namespace: str, key: Hashable) -> Any:
        return self._tables.get((namespace, key))

    def invalidate_namespace(self, namespace: str) -> int:
        """Drop every table in a namespace. Returns the number removed."""
        with self._lock:
            to_remove = [ck for ck in self._tables if ck[0] == namespace]
            for ck in to_remove:
                del self._tables[ck]
        return len(to_remove)

    def invalidate_all(self) -> int:
        with self._lock:
            count = len(self._tables)
            self._tables.clear()
        return count

    # ── Stats ────────────────────────────────────────────────────

    def namespaces(self) -> List[str]:
        return sorted({ns for ns, _ in self._tables})

    def get_stats(self) -> Dict[str, Any]:
        total = self._hits + self._misses
        by_namespace: Dict[str, int] = {}
        for ns, _ in list(self._tables):
            by_namespace[ns] = by_namespace.get(ns, 0) + 1
        return {
            "tables": len(self._tables),
            "hits": self._hits,
            "misses": self._misses,
            "hit_rate": round(self._hits / total, 4) if total > 0 else 0.0,
            "by_namespace": by_namespace,
        }


memo_registry = MemoRegistry()
