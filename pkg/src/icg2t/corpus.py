"""Seeded random corpora for the property and verification suites.

All randomness derives from one seed; child streams are split by label
(`random.Random(f"{seed}:{label}")`), so any failure is reproducible from
the (seed, label) pair alone.
"""
from __future__ import annotations

import random

from .arith2adic import beta_decompose
from .errors import DegenerateError, DomainError, NonSplitError
from .generator import GeneratorParams, params_from_matrix, validate_matrix

__all__ = [
    "child_rng",
    "random_split_matrix",
    "split_matrix_corpus",
    "expansion_corpus",
    "random_point_set",
]


def child_rng(seed, label):
    return random.Random(f"{seed}:{label}")


def random_split_matrix(rng, t):
    """A random conjugate of diag(th1, th2) with distinct odd eigenvalues,
    together with an odd starting point.  Always satisfies the parity
    pattern; splitness/normalization may still fail downstream."""
    m = 1 << t
    while True:
        th1 = rng.randrange(1, m, 2)
        th2 = rng.randrange(1, m, 2)
        if th1 == th2:
            continue
        while True:
            tmat = [rng.randrange(m) for _ in range(4)]
            dt = (tmat[0] * tmat[3] - tmat[1] * tmat[2]) % m
            if dt % 2:
                break
        inv_dt = pow(dt, -1, m)
        e11 = (tmat[0] * th1 * tmat[3] - tmat[1] * th2 * tmat[2]) * inv_dt % m
        e12 = (-tmat[0] * th1 * tmat[1] + tmat[1] * th2 * tmat[0]) * inv_dt % m
        e21 = (tmat[2] * th1 * tmat[3] - tmat[3] * th2 * tmat[2]) * inv_dt % m
        e22 = (-tmat[2] * th1 * tmat[1] + tmat[3] * th2 * tmat[0]) * inv_dt % m
        try:
            mat = validate_matrix(e11, e12, e21, e22, t)
        except DomainError:
            continue
        return mat, rng.randrange(1, m, 2)


def split_matrix_corpus(seed, count, t_min=5, t_max=32):
    """(matrix, u0, params) triples where the closed-form derivation
    succeeds; degenerate/non-split draws are redrawn."""
    rng = child_rng(seed, "split-matrices")
    out = []
    while len(out) < count:
        t = rng.randint(t_min, t_max)
        mat, u0 = random_split_matrix(rng, t)
        try:
            params = params_from_matrix(mat, u0)
        except (DegenerateError, NonSplitError):
            continue
        out.append((mat, u0, params))
    return out


def expansion_corpus(seed, count, t_min=10, t_max=24):
    """(params, s) pairs with a = 1, c = 0, beta < s <= t/2."""
    rng = child_rng(seed, "expansions")
    out = []
    while len(out) < count:
        t = rng.randint(t_min, t_max)
        m = 1 << t
        g = rng.randrange(3, m - 1, 2)
        try:
            beta, _ = beta_decompose(g, t)
        except DomainError:
            continue
        if beta + 1 > t // 2:
            continue
        s = rng.randint(beta + 1, t // 2)
        b = rng.randrange(0, m, 2)
        out.append((GeneratorParams(g=g, a=1, b=b, c=0, t=t), s))
    return out


def random_point_set(rng, size):
    """size uniform draws in [0, 1)."""
    return [rng.random() for _ in range(size)]
