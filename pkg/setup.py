"""Build script: compiles the optional Cython Monte Carlo kernel.

The package works without the extension (a NumPy fallback is selected at
import time); the build therefore treats the extension as optional and
falls back to a pure-Python install if no compiler or Cython is present.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "fda_secrecy.kernels._cykernel",
                ["src/fda_secrecy/kernels/_cykernel.pyx"],
                include_dirs=[numpy.get_include()],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
