from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("wrep._ckernel", ["src/wrep/_ckernel.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    # The package works without the compiled kernel; sparse.py falls back
    # to the pure-Python implementation at import time.
    extensions = []

setup(ext_modules=extensions)
