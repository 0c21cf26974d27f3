"""Backend selection for the jet kernels.

The compiled extension is used when it was built; otherwise the pure-Python
module with the same interface is loaded.
"""

try:
    from jetquad._ckernels import BACKEND, compose, mul, recip
except ImportError:  # extension not built
    from jetquad._pykernels import BACKEND, compose, mul, recip

__all__ = ["BACKEND", "compose", "mul", "recip"]
