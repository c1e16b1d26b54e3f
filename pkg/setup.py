"""Build script: compiles the optional lp-norm power-iteration kernel.

The extension is marked optional. If the toolchain is missing the install
still succeeds and the package falls back to the pure-NumPy kernel at
import time (see leavitt_lp.kernels).
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "leavitt_lp._kernels",
                ["src/leavitt_lp/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
