"""Exact arithmetic modulo 2^t: valuations, multiplicative orders and the
combinatorial identities used by the coefficient analysis.

Residues are represented as plain Python integers in least nonnegative form;
the bit-width exponent t travels alongside them as an explicit argument.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

__all__ = [
    "v2",
    "odd_part",
    "mod_inv_odd",
    "beta_decompose",
    "OrderInfo",
    "mult_order",
    "order_by_iteration",
    "hockey_stick",
    "alternating_poly_sum",
    "surjection_count",
    "compositions",
]


def v2(x):
    """2-adic valuation of a nonzero integer or Fraction."""
    if isinstance(x, Fraction):
        if x == 0:
            raise DomainError("v2 is undefined at 0")
        return v2(x.numerator) - v2(x.denominator)
    if x == 0:
        raise DomainError("v2 is undefined at 0")
    return (x & -x).bit_length() - 1


def odd_part(x):
    """x / 2^v2(x) for nonzero integer x."""
    return x >> v2(x)


def mod_inv_odd(x, t):
    """Inverse of an odd residue modulo 2^t."""
    if x % 2 == 0:
        raise DomainError(f"{x} is even, not invertible modulo 2^{t}")
    return pow(x, -1, 1 << t)


def beta_decompose(g, t):
    """Write g^2 = 1 + w_beta * 2^beta with w_beta odd.

    g is read as its least residue modulo 2^t and must be odd and
    distinct from +-1 mod 2^t (otherwise the decomposition is degenerate
    at this precision).  The result is lift-independent because
    beta <= t while lifts only perturb g^2 - 1 at the 2^(t+1) level.
    """
    m = 1 << t
    g = g % m
    if g % 2 == 0:
        raise DomainError("g must be odd")
    if g == 1 % m or g == m - 1:
        raise DomainError(f"g = +-1 mod 2^{t}: decomposition degenerate")
    d = g * g - 1
    beta = v2(d)
    return beta, d >> beta


@dataclass
class OrderInfo:
    """Order data of an odd g modulo 2^s.

    For non-degenerate g (g != +-1 mod 2^s) the order is tau = 2^(s-beta+1)
    and g^tau = 1 + w_s * 2^s with w_s odd; w_s is stored reduced modulo
    2^(s+2), which pins its parity and low bits exactly.
    """

    g: int
    s: int
    tau: int
    beta: int | None = None
    w_beta: int | None = None
    w_s: int | None = None
    degenerate: bool = False


def mult_order(g, s):
    """Multiplicative order of odd g modulo 2^s, with the 2-adic order data.

    Uses the closed form tau = 2^(s-beta+1) when s >= beta, and falls
    back to direct iteration for s < beta (where the order is 1 or 2).
    g = +-1 mod 2^s is flagged degenerate rather than rejected.
    """
    if s < 1:
        raise DomainError("s must be >= 1")
    m = 1 << s
    g = g % m
    if g % 2 == 0:
        raise DomainError("g must be odd")
    if g == 1 % m:
        return OrderInfo(g=g, s=s, tau=1, degenerate=True)
    if g == m - 1:
        return OrderInfo(g=g, s=s, tau=2, degenerate=True)
    beta = v2(g * g - 1)
    w_beta = (g * g - 1) >> beta
    if s < beta:
        tau = order_by_iteration(g, s)
        return OrderInfo(g=g, s=s, tau=tau, beta=beta, w_beta=w_beta)
    tau = 1 << (s - beta + 1)
    w_s = (pow(g, tau, 1 << (2 * s + 2)) - 1) >> s
    return OrderInfo(g=g, s=s, tau=tau, beta=beta, w_beta=w_beta % (1 << (s + 2)), w_s=w_s)


def order_by_iteration(g, s):
    """Order of odd g modulo 2^s by repeated multiplication (oracle path)."""
    m = 1 << s
    g = g % m
    if g % 2 == 0:
        raise DomainError("g must be odd")
    x = g
    k = 1
    while x != 1:
        x = x * g % m
        k += 1
    return k


def hockey_stick(n, k):
    """Both sides of sum_{i=k}^{n} C(i,k) = C(n+1,k+1), as exact integers.

    k > n returns (0, 0) by the empty-sum convention.
    """
    if n < 0 or k < 0:
        raise DomainError("n, k must be nonnegative")
    lhs = sum(math.comb(i, k) for i in range(k, n + 1))
    rhs = math.comb(n + 1, k + 1)
    return lhs, rhs


def alternating_poly_sum(n, coeffs):
    """sum_{j=0}^{n} (-1)^j C(n,j) P(j) for P given by integer coefficients.

    coeffs lists P in increasing degree order.  The sum vanishes exactly
    when deg P < n; a violated precondition is reported, not silently
    accepted, since the identity then fails in general.
    """
    coeffs = list(coeffs)
    deg = max((i for i, c in enumerate(coeffs) if c != 0), default=-1)
    if deg >= n:
        raise DomainError(f"deg P = {deg} >= n = {n}")

    def p(j):
        return sum(c * j**i for i, c in enumerate(coeffs))

    return sum((-1) ** j * math.comb(n, j) * p(j) for j in range(n + 1))


def compositions(n, k):
    """Yield all k-tuples of positive integers summing to n."""
    if k == 0:
        if n == 0:
            yield ()
        return
    if k == 1:
        if n >= 1:
            yield (n,)
        return
    for first in range(1, n - k + 2):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def surjection_count(n, k):
    """Both sides of the multinomial/inclusion-exclusion identity.

    lhs sums n!/(l_1!...l_k!) over positive compositions of n into k parts;
    rhs is sum_{i=0}^{k} (-1)^(k-i) C(k,i) i^n.  Both count surjections
    [n] -> [k]; k > n makes both sides vanish.
    """
    if n < 1 or k < 1:
        raise DomainError("n, k must be >= 1")
    fact_n = math.factorial(n)
    fact_k = math.factorial(k)
    lhs = 0
    # group compositions by the underlying partition; each partition of n
    # into k positive parts contributes (orderings) * multinomial(n; parts)
    for parts in _partitions(n, k):
        denom = math.prod(math.factorial(p) for p in parts)
        mult = fact_k
        seen = {}
        for p in parts:
            seen[p] = seen.get(p, 0) + 1
        for c in seen.values():
            mult //= math.factorial(c)
        lhs += mult * (fact_n // denom)
    rhs = sum((-1) ** (k - i) * math.comb(k, i) * i**n for i in range(k + 1))
    return lhs, rhs


def _partitions(n, k, largest=None):
    """Partitions of n into exactly k positive parts, non-increasing order."""
    if largest is None:
        largest = n
    if k == 1:
        if 1 <= n <= largest:
            yield (n,)
        return
    for first in range(min(n - k + 1, largest), 0, -1):
        for rest in _partitions(n - first, k - 1, first):
            yield (first,) + rest
