"""Build script: compiles the optional Jacobi kernel extension.

The package works without the extension (a pure-Python implementation of
the same kernel is selected at import time), so any failure to build it is
non-fatal.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "choicert._kernels",
                ["src/choicert/_kernels.pyx"],
                # keep the compiled kernel bit-compatible with the pure twin
                extra_compile_args=["-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
