from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("menger._kernels_c", ["src/menger/_kernels_c.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback is selected at import time; the package works
    # (slower) without the compiled core.
    ext_modules = []

setup(ext_modules=ext_modules)
