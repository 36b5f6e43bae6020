import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from icg2t import arith2adic
from icg2t.errors import DomainError


def test_v2_basics():
    assert arith2adic.v2(1) == 0
    assert arith2adic.v2(40) == 3
    assert arith2adic.v2(-8) == 3
    assert arith2adic.v2(Fraction(3, 8)) == -3
    with pytest.raises(DomainError):
        arith2adic.v2(0)


@given(st.integers(min_value=1, max_value=1 << 60))
def test_v2_odd_part_roundtrip(x):
    v = arith2adic.v2(x)
    assert x == arith2adic.odd_part(x) << v
    assert arith2adic.odd_part(x) % 2 == 1


def test_mod_inv_odd():
    assert arith2adic.mod_inv_odd(159, 8) == 95
    assert (159 * 95) % 256 == 1
    for x in range(1, 64, 2):
        assert (x * arith2adic.mod_inv_odd(x, 6)) % 64 == 1


def test_beta_decompose():
    """g^2 = 1 + w * 2^beta with w odd and beta >= 3."""
    assert arith2adic.beta_decompose(3, 8) == (3, 1)
    assert arith2adic.beta_decompose(5, 8) == (3, 3)
    assert arith2adic.beta_decompose(7, 8) == (4, 3)
    for g in range(3, 257, 2):
        beta, w = arith2adic.beta_decompose(g, 12)
        assert beta >= 3 and w % 2 == 1
        assert (g * g - 1) % (1 << (beta + 1)) == w * (1 << beta) % (1 << (beta + 1))


def test_mult_order_examples():
    info = arith2adic.mult_order(3, 5)
    assert (info.tau, info.beta) == (8, 3)
    assert arith2adic.mult_order(5, 4).tau == 4
    assert arith2adic.mult_order(1, 5).degenerate
    assert arith2adic.mult_order(1, 5).tau == 1


def test_mult_order_matches_iteration():
    for s in (3, 4, 5, 8):
        for g in range(3, (1 << s) - 1, 2):
            info = arith2adic.mult_order(g, s)
            assert info.tau == arith2adic.order_by_iteration(g, s)


def test_order_lift_valuation():
    """pow(g, tau, large modulus) - 1 has 2-adic valuation exactly s."""
    for s in (5, 9, 12):
        for g in (3, 5, 11, 2**s - 3):
            info = arith2adic.mult_order(g, s)
            if info.degenerate:
                continue
            assert arith2adic.v2(pow(g, info.tau, 1 << (s + 3)) - 1) == s


def test_hockey_stick():
    for n in range(1, 25):
        for k in range(n + 1):
            lhs, rhs = arith2adic.hockey_stick(n, k)
            assert lhs == rhs == math.comb(n + 1, k + 1)


def test_alternating_poly_sum_vanishes():
    # alternating n-th difference of any polynomial of degree < n
    assert arith2adic.alternating_poly_sum(3, [1, -4, 2]) == 0
    assert arith2adic.alternating_poly_sum(5, [0, 0, 0, 0, 7]) == 0
    with pytest.raises(DomainError):
        arith2adic.alternating_poly_sum(2, [1, 1, 1])


def test_surjection_count():
    lhs, rhs = arith2adic.surjection_count(4, 2)
    assert lhs == rhs == 14  # 2^4 - 2 surjections onto a 2-set
    for n in range(1, 10):
        for k in range(1, n + 1):
            lhs, rhs = arith2adic.surjection_count(n, k)
            assert lhs == rhs


def test_compositions():
    combos = list(arith2adic.compositions(5, 2))
    assert sorted(combos) == [(1, 4), (2, 3), (3, 2), (4, 1)]
