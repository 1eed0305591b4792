"""Builds the optional compiled polynomial kernels.

If Cython or a C compiler is unavailable the package still installs and
uses the pure-Python kernels.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("tracering._ckernels", ["src/tracering/_ckernels.pyx"],
                   extra_compile_args=["-O2"], optional=True)],
        language_level="3",
    )

setup(ext_modules=ext_modules)
