"""
Memoized number triangles.

A triangle stores rows n = base_n, base_n + 1, ... as immutable tuples indexed by k.
Rows are built under a lock and appended only when complete, so a reader that sees
row n sees all of it.
"""

import threading
from typing import List, Tuple

Row = Tuple[int, ...]


class TriangleTable:
    """Append-only triangle of exact counts, grown on demand."""

    def __init__(self, base_n: int = 0):
        self._base_n = base_n
        self._rows: List[Row] = []
        self._lock = threading.Lock()

    def _build_row(self, n: int) -> Row:
        raise NotImplementedError

    @property
    def base_n(self) -> int:
        return self._base_n

    @property
    def max_n(self) -> int:
        """Largest n built so far (base_n - 1 when empty)."""
        return self._base_n + len(self._rows) - 1

    def ensure(self, n: int) -> None:
        if n <= self.max_n:
            return
        with self._lock:
            while self.max_n < n:
                self._rows.append(self._build_row(self.max_n + 1))

    def row(self, n: int) -> Row:
        if n < self._base_n:
            raise ValueError(f"row {n} below table base {self._base_n}")
        self.ensure(n)
        return self._rows[n - self._base_n]

    def entry(self, n: int, k: int) -> int:
        if k < 0:
            return 0
        row = self.row(n)
        return row[k] if k < len(row) else 0

    def snapshot(self) -> Tuple[Row, ...]:
        """Rows built so far, as a value that later growth cannot change."""
        return tuple(self._rows)


class StirlingTable(TriangleTable):
    """
    {n brace k} by the recurrence {n brace k} = {n-1 brace k-1} + k{n-1 brace k}.

    With base_n = r and base row "1 at k = r" the same rule yields the
    r-Stirling numbers, where elements 1..r must sit in distinct blocks.
    """

    def __init__(self, base_n: int = 0):
        super().__init__(base_n)

    def _build_row(self, n: int) -> Row:
        if n == self._base_n:
            return tuple([0] * n + [1])
        prev = self._rows[-1]
        row = [0] * (n + 1)
        for k in range(1, n + 1):
            left = prev[k - 1]
            here = prev[k] if k < len(prev) else 0
            row[k] = left + k * here
        return tuple(row)
