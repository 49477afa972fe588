"""Build script. The compiled simulation kernel is optional: when Cython is
unavailable the package installs pure-Python only and the fallback kernel is
selected at import time."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "vedicfft._simcore",
                ["src/vedicfft/_simcore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
