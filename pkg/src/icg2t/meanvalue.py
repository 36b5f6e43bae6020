"""Brute-force Vinogradov mean-value counts N_{k,n}(M) and the explicit
Ford-type bound evaluator.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from itertools import combinations_with_replacement, product

from .errors import BudgetError, DomainError

__all__ = [
    "CountMethod",
    "MeanValueCount",
    "FordBound",
    "count_solutions",
    "count_solutions_naive",
    "ford_bound",
    "DEFAULT_TUPLE_BUDGET",
]

DEFAULT_TUPLE_BUDGET = 1 << 22


class CountMethod(enum.Enum):
    EXHAUSTIVE = "exhaustive"
    MEET_IN_MIDDLE = "meet-in-middle"


@dataclass
class MeanValueCount:
    """Exact count of solutions of x_1^j+..+x_k^j = y_1^j+..+y_k^j,
    j = 1..n, with variables in [1, M]."""

    k: int
    n: int
    M: int
    count: int
    method: CountMethod


def count_solutions(k, n, M, budget=DEFAULT_TUPLE_BUDGET):
    """N_{k,n}(M) by grouping k-multisets of [1,M] on their exact power-sum
    vector and summing squared (ordered) multiplicities.

    Work is one pass over C(M+k-1, k) multisets; anything above the budget
    is refused with the required size.
    """
    if k < 1 or n < 1 or M < 1:
        raise DomainError("k, n, M must be >= 1")
    work = math.comb(M + k - 1, k)
    if work > budget:
        raise BudgetError(
            f"counting needs {work} multiset evaluations, budget is {budget}",
            required=work,
            budget=budget,
        )
    fact_k = math.factorial(k)
    groups: dict[tuple[int, ...], int] = {}
    for tup in combinations_with_replacement(range(1, M + 1), k):
        key = tuple(sum(x**j for x in tup) for j in range(1, n + 1))
        mult = fact_k
        run = 1
        for i in range(1, k):
            run = run + 1 if tup[i] == tup[i - 1] else 1
            if run > 1:
                mult //= run
        groups[key] = groups.get(key, 0) + mult
    total = sum(m * m for m in groups.values())
    return MeanValueCount(k=k, n=n, M=M, count=total, method=CountMethod.MEET_IN_MIDDLE)


def count_solutions_naive(k, n, M):
    """Oracle: enumerate all M^(2k) ordered (x, y) tuples directly."""
    if k < 1 or n < 1 or M < 1:
        raise DomainError("k, n, M must be >= 1")
    sums: dict[tuple[int, ...], int] = {}
    for tup in product(range(1, M + 1), repeat=k):
        key = tuple(sum(x**j for x in tup) for j in range(1, n + 1))
        sums[key] = sums.get(key, 0) + 1
    total = sum(m * m for m in sums.values())
    return MeanValueCount(k=k, n=n, M=M, count=total, method=CountMethod.EXHAUSTIVE)


@dataclass
class FordBound:
    """log2 of n^(3n^3) * M^(2k - 0.499 n^2), with the bound's hypothesis
    ranges reported (never enforced)."""

    log2_value: float
    n_in_range: bool
    k_in_range: bool


def ford_bound(n, k, M):
    if k < 1 or n < 1 or M < 1:
        raise DomainError("k, n, M must be >= 1")
    val = 3 * n**3 * math.log2(n) + (2 * k - 0.499 * n * n) * math.log2(M)
    return FordBound(
        log2_value=val,
        n_in_range=n >= 129,
        k_in_range=2 * n * n <= k <= 4 * n * n,
    )
