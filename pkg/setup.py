import os

from setuptools import setup

ext_modules = []
if not os.environ.get("TIPSIM_NO_EXT"):
    try:
        import numpy as np
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "tipsim._kernels",
                    ["src/tipsim/_kernels.pyx"],
                    include_dirs=[np.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython available: install pure-Python, kernels fall back to numpy
        ext_modules = []

setup(ext_modules=ext_modules)
