"""Build script: compiles the optional accelerator extension.

The package works without the extension (a pure-Python mirror of the kernels
is selected at import time); set DILOGKIT_NO_EXT=1 to skip compilation.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DILOGKIT_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "dilogkit._kernels",
                    ["src/dilogkit/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install with the pure-Python backend only.
        ext_modules = []

setup(ext_modules=ext_modules)
