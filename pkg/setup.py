"""Build script: compiles the optional Cython kernel extension.

The extension is best-effort. If Cython or a C compiler is unavailable the
package still installs and falls back to the pure-Python kernels at import
time (see spurreg.kernels).
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "spurreg._kernel_cy",
                ["src/spurreg/_kernel_cy.pyx"],
                # -ffp-contract=off keeps double arithmetic bit-identical to
                # the pure-Python fallback (no FMA contraction).
                extra_compile_args=["-O2", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    print("spurreg: Cython not available, building pure-Python only", file=sys.stderr)

setup(ext_modules=ext_modules)
