"""Build script: compiles the optional fast kernel extension when Cython and a
C compiler are available; otherwise the package installs pure-Python only and
``besselsums.backend`` falls back at import time."""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "besselsums._fastkernels",
                ["src/besselsums/_fastkernels.pyx"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
