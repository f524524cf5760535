from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# -ffp-contract=off keeps the compiled kernels bit-identical to the pure
# Python backend (no fused multiply-add); -ffast-math would break that.
extensions = [
    Extension(
        "moaprod._ckernel",
        ["src/moaprod/_ckernel.pyx"],
        extra_compile_args=["-O3", "-ffp-contract=off"],
    )
]

if cythonize is not None:
    ext_modules = cythonize(
        extensions,
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
