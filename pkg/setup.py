"""Builds the optional Cython kernels; everything else lives in pyproject.toml."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install; ugig.kernels falls back at import
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("ugig._kernels", ["src/ugig/_kernels.pyx"], optional=True)],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
