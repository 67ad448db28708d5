"""Build glue for the optional compiled trace kernel.

The package works without it: ``frontkit._kernel`` falls back to the
pure-Python kernel when the extension is missing or fails to import.
"""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/frontkit/_kernel/_fast.pyx"],
        language_level=3,
    )
except ImportError:  # build proceeds without the extension
    ext_modules = []

setup(ext_modules=ext_modules)
