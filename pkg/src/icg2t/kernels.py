"""Backend selection for the hot accumulation kernels.

The compiled extension is preferred when importable; otherwise the numpy
fallback is used.  `BACKEND` names the active implementation.
"""
try:  # pragma: no cover - depends on the build environment
    from ._kernels import BACKEND, compensated_exp_sum, spectrum_mags
except ImportError:  # pragma: no cover
    from ._kernels_py import BACKEND, compensated_exp_sum, spectrum_mags

__all__ = ["BACKEND", "compensated_exp_sum", "spectrum_mags"]
