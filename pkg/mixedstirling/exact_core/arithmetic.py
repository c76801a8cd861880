"""Factorials, binomial and multinomial coefficients over Python ints."""

import math
from functools import lru_cache
from typing import Iterable


@lru_cache(maxsize=1024)
def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative number {n}")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """n choose k; 0 when k > n."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}) needs non-negative arguments")
    return math.comb(n, k)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / (p1! p2! ... pk!) for parts summing to n."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be non-negative: {parts}")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {parts} do not sum to {n}")
    denom = 1
    for p in parts:
        denom *= factorial(p)
    return factorial(n) // denom
