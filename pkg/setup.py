from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("qhact._cycore", ["src/qhact/_cycore.pyx"])],
        language_level="3",
    )
except Exception:
    # The package runs on the pure-Python kernel when the extension
    # cannot be built; see qhact._kernel.
    extensions = []

setup(ext_modules=extensions)
