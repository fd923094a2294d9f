"""Build script: compiles the optional sparse-elimination kernel.

The package is pure Python plus one optional Cython extension.  If Cython
or a C compiler is unavailable, installation proceeds without the
extension and the pure backend is selected at import time.
"""

import sys

from setuptools import setup

ext_modules = []
cmdclass = {}
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [Extension("tritoric._snfcore", ["src/tritoric/_snfcore.pyx"])],
        language_level=3,
    )
except ImportError as err:  # build without the kernel
    print(f"cython unavailable ({err}); building pure-python only",
          file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass=cmdclass)
