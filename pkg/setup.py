"""Build script for the compiled kernel extension.

The package works without the extension (a pure-numpy kernel module is
selected at import time), so the build can be skipped entirely with
HYBRIDCOLOR_PURE=1 for environments without a C compiler or OpenMP.
"""

import os

from setuptools import Extension, setup


def extensions():
    if os.environ.get("HYBRIDCOLOR_PURE") == "1":
        return []
    import numpy
    from Cython.Build import cythonize

    ext = Extension(
        "hybridcolor._kernels",
        ["src/hybridcolor/_kernels.pyx"],
        include_dirs=[numpy.get_include()],
        extra_compile_args=["-O3", "-fopenmp"],
        extra_link_args=["-fopenmp"],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
    )
    return cythonize([ext], language_level=3)


setup(ext_modules=extensions())
