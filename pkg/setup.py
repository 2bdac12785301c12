from setuptools import Extension, setup
from Cython.Build import cythonize

ext_module = Extension(
    "ringspectra._kernels._ckern",
    ["src/ringspectra/_kernels/_ckern.pyx"],
)

setup(ext_modules=cythonize(ext_module, language_level=3))
