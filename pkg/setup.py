"""Build the optional Cython oracle kernel.

The extension is marked optional: when Cython or a C compiler is missing the
package still installs and falls back to the pure-Python kernel at import.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pragma: no cover - build-time only
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "seqgame._kernels._ckernel",
                ["src/seqgame/_kernels/_ckernel.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
