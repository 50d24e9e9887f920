from Cython.Build import cythonize
from setuptools import Extension, setup

ext = Extension("whapar._kernels", ["src/whapar/_kernels.pyx"], optional=True)
setup(ext_modules=cythonize([ext], compiler_directives={"language_level": "3"}))
