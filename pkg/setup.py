from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "dynmatch._kernels._speedups",
        ["src/dynmatch/_kernels/_speedups.pyx"],
        extra_compile_args=["-O2"],
        optional=True,
    )
]

setup(
    ext_modules=cythonize(
        extensions, compiler_directives={"language_level": "3"}
    )
    if cythonize is not None
    else [],
)
