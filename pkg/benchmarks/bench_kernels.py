"""Benchmark the compiled summation kernels against the numpy fallback.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py
"""
import time

import numpy as np

from icg2t import _kernels_py
from icg2t.generator import GeneratorParams
from icg2t.sums import window_values

try:
    from icg2t import _kernels
except ImportError:
    _kernels = None


def _bench(fn, *args, repeat=5):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    backends = [("python", _kernels_py)]
    if _kernels is not None:
        backends.append(("cython", _kernels))

    rng = np.random.default_rng(0)
    print(f"{'kernel':<22}{'size':>12}" + "".join(f"{name:>14}" for name, _ in backends))

    for n in (1 << 12, 1 << 16, 1 << 20):
        phases = rng.random(n)
        times = [_bench(mod.compensated_exp_sum, phases, 4096) for _, mod in backends]
        row = f"{'compensated_exp_sum':<22}{n:>12}"
        print(row + "".join(f"{t * 1e3:>12.2f}ms" for t in times))

    p = GeneratorParams(g=3, a=1, b=2, c=0, t=14)
    for count in (64, 512, 4096):
        u = np.asarray(window_values(p, 0, count), dtype=np.uint64)
        times = [_bench(mod.spectrum_mags, u, p.t, 4096, repeat=3) for _, mod in backends]
        row = f"{'spectrum_mags t=14':<22}{count:>12}"
        print(row + "".join(f"{t * 1e3:>12.2f}ms" for t in times))

    # agreement spot check while we are here
    u = np.asarray(window_values(p, 0, 256), dtype=np.uint64)
    ref = np.asarray(_kernels_py.spectrum_mags(u, p.t, 4096))
    for name, mod in backends[1:]:
        got = np.asarray(mod.spectrum_mags(u, p.t, 4096))
        print(f"max |{name} - python| over the spectrum: {np.abs(got - ref).max():.3e}")


if __name__ == "__main__":
    main()
