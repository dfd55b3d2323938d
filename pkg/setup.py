import os

from setuptools import setup

ext_modules = []
if not os.environ.get("FUCHSCT_NO_EXT"):
    try:
        from Cython.Build import cythonize
        ext_modules = cythonize(
            ["src/fuchsct/algebra/_ckernels.pyx"],
            compiler_directives={"language_level": "3"},
            quiet=True,
        )
    except Exception:
        ext_modules = []

setup(ext_modules=ext_modules)
