"""Build script for the optional compiled kernel.

The package works without the extension (a numpy fallback is selected at
import time); the extension only speeds up the L^p objective/gradient
inner loop used by the solvers.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension
    import numpy

    ext_modules = cythonize(
        [
            Extension(
                "hardyopa._kernels",
                ["src/hardyopa/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - build environment dependent
    print(f"warning: building without compiled kernels ({exc})")
    ext_modules = []

setup(ext_modules=ext_modules)
