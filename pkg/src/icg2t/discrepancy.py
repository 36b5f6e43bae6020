"""Exact extreme discrepancy, the truncated exponential-sum bound on it,
and evaluators for the N^(-eta*rho^2) bound shapes.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .generator import GeneratorParams
from .sums import window_values

__all__ = [
    "PointSet",
    "DiscrepancyReport",
    "TheoremBounds",
    "points_from_params",
    "exact_discrepancy",
    "brute_force_discrepancy",
    "erdos_turan_bound",
    "theorem_bounds",
    "empirical_exponent",
]


@dataclass
class PointSet:
    points: np.ndarray
    provenance: object = None

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.float64)
        if self.points.size < 1:
            raise DomainError("point set must be nonempty")
        if np.any(self.points < 0) or np.any(self.points >= 1):
            raise DomainError("points must lie in [0, 1)")

    @property
    def size(self):
        return int(self.points.size)


def points_from_params(p, start, count):
    """u_n / 2^t for the generator window, as a PointSet."""
    vals = window_values(p, start, count)
    m = float(p.modulus)
    return PointSet(np.array([v / m for v in vals]), provenance=(p, start))


def exact_discrepancy(ps):
    """Extreme discrepancy via the sorted two-sided formula
    D = max_i(i/N - x_(i)) + max_i(x_(i) - (i-1)/N)."""
    x = np.sort(ps.points)
    n = x.size
    idx = np.arange(1, n + 1, dtype=np.float64)
    d_plus = float(np.max(idx / n - x))
    d_minus = float(np.max(x - (idx - 1) / n))
    return d_plus + d_minus


def brute_force_discrepancy(ps, row_chunk=256):
    """Oracle: maximize |A(J)/N - |J|| over all intervals with endpoints in
    the point set plus {0, 1}, under all four endpoint-inclusion limits."""
    n = ps.size
    if n > 1 << 12:
        raise DomainError("oracle is limited to N <= 4096 points")
    x = np.sort(ps.points)
    ends = np.unique(np.concatenate([x, [0.0, 1.0]]))
    left_open = np.searchsorted(x, ends, side="right")  # points <= e
    left_closed = np.searchsorted(x, ends, side="left")  # points < e
    best = 0.0
    e = ends
    k = e.size
    for i0 in range(0, k, row_chunk):
        i1 = min(i0 + row_chunk, k)
        a = e[i0:i1, None]
        lo_open = left_open[i0:i1, None]
        lo_closed = left_closed[i0:i1, None]
        length = e[None, :] - a
        valid = length >= 0
        for lo, hi in (
            (lo_open, left_open[None, :]),  # (a, b]
            (lo_open, left_closed[None, :]),  # (a, b)
            (lo_closed, left_open[None, :]),  # [a, b]
            (lo_closed, left_closed[None, :]),  # [a, b)
        ):
            cnt = (hi - lo).astype(np.float64)
            dev = np.abs(np.where(valid, cnt / n - length, 0.0))
            best = max(best, float(dev.max()))
    return best


def erdos_turan_bound(magnitudes, n, H, c1=3.0, c2=3.0):
    """min(1, c1/(H+1) + (c2/N) * sum_{h<=H} |S_h|/h).

    `magnitudes` lists |S_h| for h = 1..H (or longer).
    """
    if H < 1:
        raise DomainError("H must be >= 1")
    if len(magnitudes) < H:
        raise DomainError(f"need |S_h| for h = 1..{H}, got {len(magnitudes)}")
    acc = sum(magnitudes[h - 1] / h for h in range(1, H + 1))
    return min(1.0, c1 / (H + 1) + c2 * acc / n)


@dataclass
class DiscrepancyReport:
    """Exact discrepancy of a generator window next to its bound values."""

    exact: float
    et_bound: float
    H: int
    thm2_bound: float
    rho: float
    empirical_eta: float


@dataclass
class TheoremBounds:
    thm1: float
    thm2: float
    rho: float
    thm1_hypothesis: bool  # N > 2^(8*beta)
    thm2_hypothesis: bool  # N > 2^(32*beta)


def theorem_bounds(n, t, beta, c=1.0, eta=1.0, c0=1.0, eta0=1.0):
    """Values of c*N^(1 - eta*rho^2) and c0*N^(-eta0*rho^2) with
    rho = ln(N)/t, plus the hypothesis-range flags."""
    if n < 2 or t < 3:
        raise DomainError("need N >= 2 and t >= 3")
    rho = math.log(n) / t
    thm1 = c * n ** (1 - eta * rho * rho)
    thm2 = c0 * n ** (-eta0 * rho * rho)
    return TheoremBounds(
        thm1=thm1,
        thm2=thm2,
        rho=rho,
        thm1_hypothesis=n > 2 ** (8 * beta),
        thm2_hypothesis=n > 2 ** (32 * beta),
    )


def empirical_exponent(n, t, magnitude):
    """eta_emp with |S| = N^(1 - eta_emp * rho^2); infinite when |S| = 0."""
    if n < 2:
        raise DomainError("need N >= 2")
    if magnitude < 0 or magnitude > n * (1 + 1e-9):
        raise DomainError("|S| must lie in [0, N]")
    rho = math.log(n) / t
    if magnitude == 0.0:
        return math.inf
    return (1 - math.log(magnitude) / math.log(n)) / (rho * rho)
