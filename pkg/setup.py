"""Build script: compiles the optional search kernel.

The package works without the extension (a pure-Python backend is selected at
import time), so the build is marked optional and failures degrade gracefully.
"""

import warnings

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "fourfold._kernel",
                ["src/fourfold/_kernel.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    warnings.warn("Cython not available; installing without the compiled search kernel")
    ext_modules = []

setup(ext_modules=ext_modules)
