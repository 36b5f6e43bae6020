"""Exponential sums of the generator, full spectra, Korobov-style double
sums and the desk-scale checkers for the two sum-reduction inequalities.

Phase arguments are reduced modulo 1 in exact integer arithmetic
(h*u mod 2^t, divided by 2^t) before any transcendental evaluation, and
summation follows the deterministic chunked order of the kernels module.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .errors import BudgetError, DomainError
from .generator import GeneratorParams, closed_form_traj

__all__ = [
    "DEFAULT_BUDGET",
    "DEFAULT_CHUNK",
    "SumSeries",
    "SpectrumReport",
    "PhasePolynomial",
    "KorobovInput",
    "exp_sum",
    "spectrum",
    "double_sum",
    "korobov_rhs",
    "shift_reduction_check",
]

DEFAULT_BUDGET = 1 << 34  # term evaluations
DEFAULT_CHUNK = 4096


@dataclass
class SumSeries:
    """S_h(L, N) = sum of e(h*u_n/2^t) over the window, with the
    compensated-accumulation error estimate."""

    params: GeneratorParams
    h: int
    start: int
    count: int
    value: complex
    abs_error: float

    @property
    def magnitude(self):
        return abs(self.value)


@dataclass
class SpectrumReport:
    params: GeneratorParams
    start: int
    count: int
    magnitudes: np.ndarray
    max_odd: float
    parseval_total: float


@dataclass
class PhasePolynomial:
    """Phase polynomial coefficients alpha_1..alpha_n as reduced fractions."""

    coefficients: list[Fraction] = field(default_factory=list)

    def __post_init__(self):
        self.coefficients = [Fraction(c) for c in self.coefficients]

    @property
    def degree(self):
        return len(self.coefficients)

    def denominators(self):
        return [c.denominator for c in self.coefficients]


@dataclass
class KorobovInput:
    """Inputs of the double-sum bound: box size M, mean-value count
    N_{k,n}(M), and the phase denominators q_1..q_n."""

    k: int
    n: int
    M: int
    q_list: list[int]
    meanvalue_count: int

    def __post_init__(self):
        if self.k < 1 or self.n < 1 or self.M < 1:
            raise DomainError("k, n, M must be >= 1")
        if len(self.q_list) != self.n:
            raise DomainError("q_list must have one denominator per degree")
        if any(q < 1 for q in self.q_list):
            raise DomainError("denominators must be positive")
        if self.meanvalue_count < 1:
            raise DomainError("mean-value count must be >= 1")

    @property
    def q_max(self):
        return max(self.q_list)


def window_values(p, start, count):
    """u_start..u_{start+count-1} as plain integers."""
    return closed_form_traj(p, start, count).values


def _phases(values, h, t):
    m = 1 << t
    h %= m
    if t <= 32:
        u = np.asarray(values, dtype=np.uint64)
        nums = (np.uint64(h) * u) & np.uint64(m - 1)
        return nums.astype(np.float64) / float(m)
    return np.array([(h * v) % m / m for v in values], dtype=np.float64)


def exp_sum(p, h, start=0, count=1, chunk=DEFAULT_CHUNK):
    """S_h(start, count) with deterministic compensated accumulation."""
    if count < 1:
        raise DomainError("count must be >= 1")
    values = window_values(p, start, count)
    if h % p.modulus == 0:
        # all phases are exactly zero
        return SumSeries(p, h, start, count, complex(count), 0.0)
    value, err = kernels.compensated_exp_sum(_phases(values, h, p.t), chunk)
    return SumSeries(p, h, start, count, value, err)


def spectrum(p, start=0, count=1, budget=DEFAULT_BUDGET, chunk=DEFAULT_CHUNK):
    """|S_h| for every h mod 2^t, the max over odd h, and the Parseval
    total sum_h |S_h|^2 (equal to 2^t * count for distinct window values)."""
    if count < 1:
        raise DomainError("count must be >= 1")
    if p.t > 24:
        raise DomainError("spectrum sweep is limited to t <= 24")
    terms = count << p.t
    if terms > budget:
        raise BudgetError(
            f"spectrum needs {terms} term evaluations, budget is {budget}",
            required=terms,
            budget=budget,
        )
    values = np.asarray(window_values(p, start, count), dtype=np.uint64)
    mags = np.asarray(kernels.spectrum_mags(values, p.t, chunk))
    max_odd = float(mags[1::2].max())
    parseval = float(np.sum(mags * mags))
    return SpectrumReport(p, start, count, mags, max_odd, parseval)


def double_sum(alphas, M):
    """S = sum_{x,y=1}^{M} e(alpha_1*xy + ... + alpha_n*(xy)^n).

    Coefficients may be Fractions (phases then reduced mod 1 exactly)
    or floats.
    """
    if M < 1:
        raise DomainError("M must be >= 1")
    if isinstance(alphas, PhasePolynomial):
        alphas = alphas.coefficients
    alphas = list(alphas)
    exact = all(isinstance(a, (Fraction, int)) for a in alphas)
    total = 0.0 + 0.0j
    for x in range(1, M + 1):
        for y in range(1, M + 1):
            pxy = x * y
            if exact:
                ph = Fraction(0)
                for ell, a in enumerate(alphas, start=1):
                    ph += Fraction(a) * pxy**ell
                ph -= math.floor(ph)
                total += cmath.exp(2j * cmath.pi * float(ph))
            else:
                ph = sum(float(a) * pxy**ell for ell, a in enumerate(alphas, start=1))
                total += cmath.exp(2j * cmath.pi * math.fmod(ph, 1.0))
    return total


def korobov_rhs(inp):
    """log2 of the double-sum bound right-hand side:
    (64 k^2 log(3Q))^{ n/2 } * M^{4k^2-2k} * N_{k,n}(M)
      * prod_l min(M^l, sqrt(q_l) + M^l/sqrt(q_l)).
    """
    k, n, M = inp.k, inp.n, inp.M
    log3q = math.log(3 * inp.q_max)
    out = 0.5 * n * math.log2(64 * k * k * log3q)
    out += (4 * k * k - 2 * k) * math.log2(M)
    out += math.log2(inp.meanvalue_count)
    for ell, q in enumerate(inp.q_list, start=1):
        box = float(M) ** ell
        rq = math.sqrt(q)
        out += math.log2(min(box, rq + box / rq))
    return out


def shift_reduction_check(f, N, M, a):
    """Both sides of the single-to-double reduction inequality:
    |sum_x e(f(x))| <= (1/M^2) sum_x |sum_{y,z=1}^M e(f(x+ayz))| + 2aM^2.
    """
    if N < 1 or M < 1:
        raise DomainError("N, M must be >= 1")
    if a < 0:
        raise DomainError("a must be >= 0")
    lhs = abs(sum(cmath.exp(2j * cmath.pi * math.fmod(f(x), 1.0)) for x in range(N)))
    acc = 0.0
    for x in range(N):
        inner = 0.0 + 0.0j
        for y in range(1, M + 1):
            for z in range(1, M + 1):
                inner += cmath.exp(2j * cmath.pi * math.fmod(f(x + a * y * z), 1.0))
        acc += abs(inner)
    rhs = acc / (M * M) + 2 * a * M * M
    return lhs, rhs
