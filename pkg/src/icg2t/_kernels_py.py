"""Pure-python (numpy) accumulation kernels.

Fallback implementation selected when the compiled extension is absent.
Both backends honor the same deterministic reduction contract: terms are
accumulated chunk by chunk in index order with Kahan compensation across
chunk boundaries, so results are reproducible for a fixed chunk size.
"""
from __future__ import annotations

import numpy as np

BACKEND = "python"

_TWO_PI = 2.0 * np.pi
_TABLE_MAX_BITS = 20  # cache e(v/2^t) up to 8 MiB of complex values


def _kahan_add(state, term):
    total, comp = state
    y = term - comp
    new = total + y
    comp = (new - total) - y
    return new, comp


def compensated_exp_sum(phases, chunk=4096):
    """Sum of e(phase_i) over float phases in [0,1), chunked in index order.

    Returns (value, error_estimate); the estimate is a coarse bound on the
    floating accumulation error (each term has unit magnitude).
    """
    phases = np.asarray(phases, dtype=np.float64)
    n = phases.shape[0]
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    for i in range(0, n, chunk):
        part = complex(np.sum(np.exp((_TWO_PI * 1j) * phases[i : i + chunk])))
        total, comp = _kahan_add((total, comp), part)
    err = 4.0 * np.finfo(np.float64).eps * max(n, 1)
    return complex(total), err


def _root_table(tbits):
    m = 1 << tbits
    return np.exp((_TWO_PI * 1j / m) * np.arange(m, dtype=np.float64))


def spectrum_mags(u, tbits, chunk=4096):
    """|S_h| for all h = 0..2^t-1 over the value window u (uint64 residues).

    Requires tbits <= 32 so that h*u fits in uint64.
    """
    if tbits > 32:
        raise ValueError("spectrum sweep requires t <= 32")
    m = 1 << tbits
    mask = np.uint64(m - 1)
    u = np.asarray(u, dtype=np.uint64)
    n = u.shape[0]
    mags = np.empty(m, dtype=np.float64)
    table = _root_table(tbits) if tbits <= _TABLE_MAX_BITS else None
    inv_m = 1.0 / m
    for h in range(m):
        nums = (np.uint64(h) * u) & mask
        total = 0.0 + 0.0j
        comp = 0.0 + 0.0j
        for i in range(0, n, chunk):
            blk = nums[i : i + chunk]
            if table is not None:
                part = complex(np.sum(table[blk]))
            else:
                part = complex(np.sum(np.exp((_TWO_PI * 1j) * (blk * inv_m))))
            total, comp = _kahan_add((total, comp), part)
        mags[h] = abs(total)
    return mags
