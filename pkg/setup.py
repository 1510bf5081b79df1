"""Build script: compiles the optional C extension for polynomial kernels.

The package works without the extension (pure-Python fallback); the
extension only speeds up the inner coefficient arithmetic.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/heckeb/_poly_cy.pyx"],
        compiler_directives={"language_level": "3"},
    )
    for ext in ext_modules:
        ext.optional = True
except ImportError:
    pass

setup(ext_modules=ext_modules)
