import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    # The compiled kernel is a speedup only; benign.kernel falls back to the
    # pure-Python implementation when the extension is missing.
    def run(self):
        try:
            super().run()
        except Exception as exc:
            print(f"warning: skipping speedup extension ({exc})", file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc})", file=sys.stderr)


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("benign._fastwords", ["src/benign/_fastwords.pyx"])],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
