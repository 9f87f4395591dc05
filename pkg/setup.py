"""Builds the optional compiled kernel.

The package works without it (a pure-Python twin is selected at import);
set DIAGMIN_NO_EXT=1 to skip the extension entirely.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("DIAGMIN_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/diagmin/_speedups.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
