from setuptools import setup
from setuptools.command.build_ext import build_ext


class optional_build_ext(build_ext):
    # the pure-Python kernels take over when the compiler is unavailable
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover
            print("warning: compiled kernels not built (%s)" % exc)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover
            print("warning: %s not built (%s)" % (ext.name, exc))


try:
    from Cython.Build import cythonize

    ext_modules = cythonize(["src/maxtb/_kernel.pyx"], quiet=True)
except ImportError:  # pragma: no cover
    ext_modules = []

setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
