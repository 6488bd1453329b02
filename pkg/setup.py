from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "ringcodes._kernels_cy",
                ["src/ringcodes/_kernels_cy.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        language_level=3,
    )
)
