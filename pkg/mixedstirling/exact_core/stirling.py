"""
Stirling numbers of the second kind, Bell numbers and r-Stirling numbers.

stirling2 is the production path. stirling2_explicit (inclusion-exclusion) and
stirling2_howard (sum over compositions) are independent checks used by the tests
and the verification harness.
"""

import itertools
from fractions import Fraction
from typing import Tuple

from mixedstirling.cache import memo_registry
from mixedstirling.exact_core.arithmetic import binomial, factorial
from mixedstirling.exact_core.tables import StirlingTable


def _table(r: int = 0) -> StirlingTable:
    return memo_registry.get_or_create("stirling", r, lambda: StirlingTable(base_n=r))


def stirling2(n: int, k: int) -> int:
    """Partitions of [n] into k non-empty blocks."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling2({n}, {k}) needs non-negative arguments")
    if k > n:
        return 0
    return _table().entry(n, k)


def stirling_row(n: int) -> Tuple[int, ...]:
    """({n brace 0}, ..., {n brace n})."""
    if n < 0:
        raise ValueError(f"negative row index {n}")
    return _table().row(n)


def stirling2_explicit(n: int, k: int) -> int:
    """(1/k!) * sum_m (-1)^(k-m) C(k,m) m^n."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling2_explicit({n}, {k}) needs non-negative arguments")
    total = sum((-1) ** (k - m) * binomial(k, m) * m ** n for m in range(k + 1))
    value, rem = divmod(total, factorial(k))
    if rem != 0 or value < 0:
        raise ArithmeticError(
            f"inclusion-exclusion sum {total} for ({n}, {k}) not divisible by {k}!"
        )
    return value


def stirling2_howard(n: int, k: int) -> int:
    """(n!/k!) * sum over compositions i1+...+ik = n (ij >= 1) of 1/(i1!...ik!)."""
    if n < 0 or k < 0:
        raise ValueError(f"stirling2_howard({n}, {k}) needs non-negative arguments")
    if k == 0:
        return 1 if n == 0 else 0
    if k > n:
        return 0
    acc = Fraction(0)
    # a composition of n into k parts is a choice of k-1 cut points in 1..n-1
    for cuts in itertools.combinations(range(1, n), k - 1):
        bounds = (0,) + cuts + (n,)
        denom = 1
        for a, b in zip(bounds, bounds[1:]):
            denom *= factorial(b - a)
        acc += Fraction(1, denom)
    value = acc * factorial(n) / factorial(k)
    if value.denominator != 1:
        raise ArithmeticError(f"composition sum for ({n}, {k}) is not integral: {value}")
    return int(value)


def bell(n: int) -> int:
    """Number of partitions of [n]; bell(0) = 1."""
    return sum(stirling_row(n))


def r_stirling(n: int, k: int, r: int) -> int:
    """Partitions of [n] into k blocks with 1..r in distinct blocks."""
    if r < 0 or k < 0:
        raise ValueError(f"r_stirling({n}, {k}, {r}) needs non-negative k and r")
    if n < r:
        raise ValueError(f"r_stirling needs n >= r, got n={n}, r={r}")
    if k > n:
        return 0
    return _table(r).entry(n, k)
