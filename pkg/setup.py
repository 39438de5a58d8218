"""Build script: compiles the optional speedup extension when Cython is available.

Without Cython (or a working C toolchain) the package still installs and runs
on the pure-Python kernel backend.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    extensions = [
        Extension(
            "functidim._core._speedups",
            ["src/functidim/_core/_speedups.pyx"],
            extra_compile_args=["-O3"],
        )
    ]
    ext_modules = cythonize(extensions, compiler_directives={"language_level": "3"})
else:
    ext_modules = []

setup(ext_modules=ext_modules)
