"""Build script: compiles the optional speedup extension.

The package is fully functional without the extension; tropdet.kernels
falls back to the pure-Python implementation when the compiled module
is missing (no compiler, no Cython, or the build simply failed).
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "tropdet._kernels_c",
                ["src/tropdet/_kernels_c.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
