"""The coefficient machinery behind the sum bounds: the polynomial F(n)
with u_{n*tau_s} = -F(n) mod 2^t, its exact integer coefficients, their
2-adic valuations, and the reduction of phase coefficients to lowest terms.

The displayed definition of F in the source analysis starts the inner
binomial index at 1, which drops the constant sum_{j<t} (2-b)^j; without
that constant the congruence fails at n = 0, so the full form (constant
included in the degree-0 coefficient) is computed here.  All coefficients
of degree >= 1 agree with the displayed definition verbatim.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith2adic import beta_decompose, v2
from .errors import DomainError
from .generator import GeneratorParams, closed_form_eval
from .sums import PhasePolynomial

__all__ = ["FExpansion", "build_F", "congruence_check", "coeff_valuations", "reduce_phases"]


@dataclass
class FExpansion:
    """kappa!*F(n) = sum_l coeffs[l] * n^l with exact integer coefficients
    coeffs[l] = a_l * 2^(l*s); omegas[l] = v2(a_l) for l >= 1."""

    params: GeneratorParams
    s: int
    kappa: int
    tau_s: int
    w: int
    coeffs: list[int]
    omegas: list[int | None]

    @property
    def t(self):
        return self.params.t


def _truncated_geometric(base_coeffs, terms, kappa):
    """sum_{j=0}^{terms-1} P(x)^j in Z[x]/(x^(kappa+1)) for P given by
    base_coeffs (exact integers)."""
    one = [1] + [0] * kappa
    acc = list(one)
    power = list(one)
    for _ in range(1, terms):
        power = _poly_mul(power, base_coeffs, kappa)
        acc = [a + b for a, b in zip(acc, power)]
    return acc


def _poly_mul(p, q, kappa):
    out = [0] * (kappa + 1)
    for i, pi in enumerate(p):
        if pi == 0:
            continue
        for j, qj in enumerate(q):
            if i + j > kappa:
                break
            out[i + j] += pi * qj
    return out


def f_components(g, b, t, s, n):
    """Grade-l components of F(n), l = 0..kappa, as exact integers.

    Component l collects the (w*2^s)^l part of
    sum_{j<t} (2-b + sum_i C(n,i)(w*2^s)^i)^j, evaluated in the ring
    truncated past degree kappa.
    """
    beta, _ = beta_decompose(g, t)
    if s <= beta:
        raise DomainError(f"s = {s} must exceed beta = {beta}")
    kappa = -(-t // s) - 1
    tau_s = 1 << (s - beta + 1)
    w = (pow(g, tau_s, 1 << (t + s + 2)) - 1) >> s
    base = [2 - b] + [math.comb(n, i) * w**i << (s * i) for i in range(1, kappa + 1)]
    return _truncated_geometric(base, t, kappa)


def build_F(p, s):
    """Exact expansion of F for a generator normalized to a = 1, c = 0.

    Coefficients of kappa!*F(n) are recovered by exact interpolation
    through the integer values at n = 0..kappa (forward differences),
    so the valuations omegas are certified exactly.
    """
    if p.a != 1 or p.c != 0:
        raise DomainError("build_F requires the normalized form a = 1, c = 0")
    beta, _ = beta_decompose(p.g, p.t)
    if s <= beta:
        raise DomainError(f"s = {s} must exceed beta = {beta}")
    t = p.t
    kappa = -(-t // s) - 1
    tau_s = 1 << (s - beta + 1)
    w = (pow(p.g, tau_s, 1 << (t + s + 2)) - 1) >> s
    fact_k = math.factorial(kappa)
    values = [fact_k * sum(f_components(p.g, p.b, t, s, n)) for n in range(kappa + 1)]
    coeffs = _interpolate_integer_poly(values)
    omegas: list[int | None] = [None]
    for ell in range(1, kappa + 1):
        a_ell = coeffs[ell] >> (ell * s)
        if coeffs[ell] != a_ell << (ell * s):
            raise AssertionError("coefficient not divisible by 2^(l*s)")
        omegas.append(v2(a_ell) if a_ell else None)
    return FExpansion(
        params=p, s=s, kappa=kappa, tau_s=tau_s, w=w, coeffs=coeffs, omegas=omegas
    )


def _interpolate_integer_poly(values):
    """Monomial coefficients of the unique degree < len(values) polynomial
    through (0, v0), (1, v1), ...; must come out integral."""
    n = len(values)
    # Newton forward differences -> binomial basis
    diffs = list(values)
    newton = [diffs[0]]
    for level in range(1, n):
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]
        newton.append(diffs[0])
    # expand sum_k newton[k] * C(x, k) into monomials
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]  # C(x, 0) = 1
    for k in range(n):
        for i, b in enumerate(basis):
            coeffs[i] += newton[k] * b
        # C(x, k+1) = C(x, k) * (x - k) / (k + 1)
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, b in enumerate(basis):
            nxt[i + 1] += b / (k + 1)
            nxt[i] -= b * k / (k + 1)
        basis = nxt
    out = []
    for ci in coeffs:
        if ci.denominator != 1:
            raise AssertionError("interpolation produced a non-integer coefficient")
        out.append(ci.numerator)
    return out


def f_value(fe, n):
    """Exact integer value of F(n) (the coefficient polynomial divided
    by kappa!, which it is always divisible by)."""
    fact_k = math.factorial(fe.kappa)
    total = sum(c * n**ell for ell, c in enumerate(fe.coeffs))
    if total % fact_k:
        raise AssertionError("kappa!*F(n) not divisible by kappa!")
    return total // fact_k


def congruence_check(fe, n):
    """Whether u_{n*tau_s} + F(n) = 0 mod 2^t."""
    if n < 0:
        raise DomainError("n must be >= 0")
    u = closed_form_eval(fe.params, n * fe.tau_s)
    return (u + f_value(fe, n)) % fe.params.modulus == 0


def coeff_valuations(fe):
    """(l, omega_l, v2(kappa!/l!)) for l = 1..kappa.

    The two valuations agree, omega_kappa = 0, and omega_l <= v2(kappa!)
    for l < kappa; callers assert these.
    """
    fact_k = math.factorial(fe.kappa)
    out = []
    for ell in range(1, fe.kappa + 1):
        expected = v2(fact_k // math.factorial(ell))
        out.append((ell, fe.omegas[ell], expected))
    return out


def reduce_phases(fe, h, shift=0):
    """Phase coefficients h * g^(-shift) * a_l * 2^(l*s) / (kappa! * 2^t)
    in lowest terms, with the denominator window
    2^(t - l*s - omega_l) <= q_l <= kappa! * 2^(t - l*s - omega_l) asserted.
    """
    if h % 2 == 0:
        raise DomainError("h must be odd")
    p = fe.params
    g_inv_n = pow(pow(p.g, shift, p.modulus), -1, p.modulus)
    fact_k = math.factorial(fe.kappa)
    fracs = []
    for ell in range(1, fe.kappa + 1):
        if fe.omegas[ell] is None:
            raise AssertionError(f"vanishing coefficient at degree {ell}")
        fr = Fraction(h * g_inv_n * fe.coeffs[ell], fact_k << p.t)
        fr -= math.floor(fr)  # phases live mod 1; reduction keeps q intact
        q = fr.denominator
        lo = 1 << (p.t - ell * fe.s - fe.omegas[ell])
        if not lo <= q <= fact_k * lo:
            raise AssertionError(
                f"denominator {q} outside window [{lo}, {fact_k * lo}] at degree {ell}"
            )
        fracs.append(fr)
    return PhasePolynomial(coefficients=fracs)
