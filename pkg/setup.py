# Builds the optional compiled kernel extension.  If Cython or a C compiler
# is unavailable the install still succeeds and the package falls back to
# the pure-Python kernels at import time.
from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "hsplearn._kernels",
                sources=["src/hsplearn/_kernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
