import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ext_modules = []
if cythonize is not None and not os.environ.get("WREATHGROWTH_PURE_PYTHON"):
    ext_modules = cythonize(
        [
            Extension(
                "wreathgrowth._ckernels",
                ["src/wreathgrowth/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
