from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("solnd._speedups", ["src/solnd/_speedups.pyx"])],
        compiler_directives={"language_level": "3"},
    )
)
