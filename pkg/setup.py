import os
import warnings

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

REQUIRE_EXT = os.environ.get("LINKATLAS_REQUIRE_EXT") == "1"


class optional_build_ext(build_ext):
    """Build the compiled kernel if possible; fall back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            if REQUIRE_EXT:
                raise
            warnings.warn(f"compiled kernel skipped ({exc}); using pure-Python fallback")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            if REQUIRE_EXT:
                raise
            warnings.warn(f"compiled kernel skipped ({exc}); using pure-Python fallback")


ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "linkatlas._ckernel",
                ["src/linkatlas/_ckernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
elif REQUIRE_EXT:
    raise RuntimeError("LINKATLAS_REQUIRE_EXT=1 but Cython is not available")

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
