from setuptools import setup
from setuptools.extension import Extension

# The compiled kernel is optional: the package falls back to a pure-Python
# twin (qgsurf._kernel_py) when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("qgsurf._kernel", ["src/qgsurf/_kernel.pyx"],
                   extra_compile_args=["-O3"])],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
