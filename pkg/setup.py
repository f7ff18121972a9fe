"""Build script.

The compiled kernel is optional: when Cython (or a C toolchain) is missing
the install proceeds without it and the package falls back to the pure
Python kernels at import time.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "bckcodes._kernels._fast",
                sources=["src/bckcodes/_kernels/_fast.pyx"],
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
