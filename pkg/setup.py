"""Build script for the optional compiled kernels.

The package works without the extension: cptprep.kernels falls back to the
pure-Python implementations when cptprep._kernels_c is missing. Set
CPTPREP_NO_EXT=1 to skip compilation entirely.
"""

import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the extension if possible; fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # compiler missing, etc.
            self._warn(exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            self._warn(exc)

    @staticmethod
    def _warn(exc):
        print(
            f"WARNING: could not build cptprep._kernels_c ({exc}); "
            "installing with pure-Python kernels only.",
            file=sys.stderr,
        )


ext_modules = []
cmdclass = {}
if os.environ.get("CPTPREP_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("cptprep._kernels_c", ["src/cptprep/_kernels_c.pyx"])],
            compiler_directives={"language_level": "3"},
        )
        cmdclass["build_ext"] = optional_build_ext
    except ImportError:
        print("WARNING: Cython not available; skipping compiled kernels.", file=sys.stderr)

setup(ext_modules=ext_modules, cmdclass=cmdclass)
