"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python kernel with the
same API is selected at import time), so a failed compile only costs
speed, not functionality.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("STEINERPACK_PURE", "") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("steinerpack._kernel_cy", ["src/steinerpack/_kernel_cy.pyx"])],
            compiler_directives={
                "language_level": 3,
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
                "cdivision": True,
            },
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
