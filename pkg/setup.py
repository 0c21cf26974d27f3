from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# no FMA contraction: the compiled kernels must round exactly like Python
kernels = Extension(
    "jetquad._ckernels",
    ["src/jetquad/_ckernels.pyx"],
    extra_compile_args=["-O2", "-ffp-contract=off"],
    optional=True,
)

setup(ext_modules=cythonize([kernels]) if cythonize else [])
