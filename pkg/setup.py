"""Build script: compiles the optional GF(256) extension when Cython is around.

The package works without the extension (a pure-Python kernel is selected at
import time), so a failed build of the .pyx is not fatal to installation.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "maildust.gf256._gf256_cy",
                sources=["src/maildust/gf256/_gf256_cy.pyx"],
            )
        ],
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
        },
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
