import os
import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

compile_args = ["-O3", "-std=c++17"]
directives = {"language_level": 3, "boundscheck": False, "wraparound": False}


class optional_build_ext(build_ext):
    """Skip the compiled kernels if they fail to build; the package falls back to pure Python."""

    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: compiled kernels not built ({exc}); using pure Python", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: {ext.name} not built ({exc})", file=sys.stderr)


extensions = []
if cythonize is not None and not os.environ.get("PAULIZETA_NO_EXT"):
    extensions = cythonize(
        [
            Extension(
                f"paulizeta.{name}",
                [f"src/paulizeta/{name}.pyx"],
                language="c++",
                extra_compile_args=compile_args,
            )
            for name in ("_zeta", "_pairwise")
        ],
        compiler_directives=directives,
    )

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
