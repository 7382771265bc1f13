"""Build script for the optional compiled kernels.

The package is pure Python by default.  When Cython and a C compiler are
available, the hot coefficient-vector kernels are compiled to a C extension
(pathenum._speedups); otherwise installation proceeds without it and the
pure-Python kernels in pathenum._kernels_py are used at import time.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/pathenum/_speedups.pyx"], language_level="3"
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
