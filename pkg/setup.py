"""Build hook for the optional compiled matcher kernel.

The extension is marked optional: without Cython or a C++ toolchain the
install still succeeds and the package falls back to the pure-Python kernel.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "seerkit._trie_cy",
                ["src/seerkit/_trie_cy.pyx"],
                language="c++",
                optional=True,
            )
        ],
        language_level="3",
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
