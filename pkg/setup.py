import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    """Build the compiled kernels if possible; the package runs without them."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler etc.
            print(f"WARNING: compiled kernels skipped ({exc}); pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: building {ext.name} failed ({exc}); pure-Python fallback will be used")


extensions = []
if os.environ.get("FRANELCHECK_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "franelcheck.kernels._native",
                    ["src/franelcheck/kernels/_native.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=extensions, cmdclass={"build_ext": optional_build_ext})
