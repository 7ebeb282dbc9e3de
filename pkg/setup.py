from setuptools import Extension, setup

# The compiled normal-form kernels are optional: the package falls back to
# the pure-Python implementation when the extension is absent.
try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "su21._zlinalg_fast",
                ["src/su21/_zlinalg_fast.pyx"],
                extra_compile_args=["-O2"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
