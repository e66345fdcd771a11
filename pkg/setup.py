"""Build script: compiles the optional speedup extension.

The package works without the extension (a pure-Python kernel lane is
selected at import time); the extension only accelerates the hot
combinatorial scans.
"""

import sys

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "esgame._core._speedups",
                ["src/esgame/_core/_speedups.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
except ImportError:
    print("Cython not available; building pure-Python only", file=sys.stderr)

setup(ext_modules=ext_modules)
