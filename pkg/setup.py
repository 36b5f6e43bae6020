"""Build the optional compiled accumulation kernels.

The package works without them (a numpy fallback is selected at import);
building just makes spectrum sweeps and scans faster.
"""
import sys

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "icg2t._kernels",
                ["src/icg2t/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - build-env dependent
    print(f"icg2t: skipping compiled kernels ({exc}); pure-python fallback will be used",
          file=sys.stderr)

setup(ext_modules=ext_modules)
