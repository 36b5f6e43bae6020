import pytest

from icg2t.errors import BudgetError, DomainError
from icg2t.meanvalue import (
    CountMethod,
    count_solutions,
    count_solutions_naive,
    ford_bound,
)


def test_known_counts():
    assert count_solutions(1, 1, 7).count == 7
    assert count_solutions(2, 1, 2).count == 6
    for m in range(1, 9):
        assert count_solutions(1, 1, m).count == m


def test_grouped_equals_naive():
    for k in (1, 2, 3):
        for n in (1, 2):
            for m in (1, 2, 5):
                assert count_solutions(k, n, m).count == count_solutions_naive(k, n, m).count


def test_count_bounds():
    # diagonal solutions give M^k, the trivial count is M^{2k}
    for k, n, m in ((2, 2, 4), (3, 1, 5)):
        c = count_solutions(k, n, m).count
        assert m**k <= c <= m ** (2 * k)


def test_methods_tagged():
    assert count_solutions(2, 1, 3).method is not count_solutions_naive(2, 1, 3).method


def test_budget_refusal():
    with pytest.raises(BudgetError):
        count_solutions(40, 1, 10**6)


def test_validation():
    with pytest.raises(DomainError):
        count_solutions(0, 1, 2)


def test_ford_bound_example():
    fb = ford_bound(2, 8, 10)
    assert fb.log2_value == pytest.approx(70.5203, abs=5e-4)
    assert fb.n_in_range is False  # hypothesis needs n >= 129
    assert fb.k_in_range is True  # 2n^2 <= 8 <= 4n^2


def test_ford_bound_hypothesis_flags():
    fb = ford_bound(129, 2 * 129**2, 2)
    assert fb.n_in_range and fb.k_in_range
    assert ford_bound(2, 100, 3).k_in_range is False
