"""Classical composite quadrature rules and a reference integrator."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from jetquad.errors import ConvergenceError, PlanError

__all__ = [
    "RuleResult",
    "midpoint",
    "trapezoid",
    "simpson",
    "reference_integral",
    "RULES",
]

RealFunction = Callable[[float], float]


@dataclass(frozen=True)
class RuleResult:
    rule: str
    n_sub: int
    value: float


def _check(a, b, n_sub):
    if not a < b:
        raise PlanError(f"need a < b, got a={a!r}, b={b!r}")
    if not isinstance(n_sub, int) or n_sub < 1:
        raise PlanError(f"n_sub must be a positive integer, got {n_sub!r}")


def midpoint(f: RealFunction, a: float, b: float, n_sub: int) -> float:
    _check(a, b, n_sub)
    h = (b - a) / n_sub
    s = 0.0
    for i in range(1, n_sub + 1):
        s += f(a + (i - 0.5) * h)
    return h * s


def trapezoid(f: RealFunction, a: float, b: float, n_sub: int) -> float:
    _check(a, b, n_sub)
    h = (b - a) / n_sub
    s = 0.5 * f(a)
    for i in range(1, n_sub):
        s += f(a + i * h)
    s += 0.5 * f(b)
    return h * s


def simpson(f: RealFunction, a: float, b: float, n_sub: int) -> float:
    """Composite Simpson rule; ``n_sub`` must be even."""
    _check(a, b, n_sub)
    if n_sub % 2:
        raise PlanError(f"Simpson's rule needs an even number of subintervals, got {n_sub}")
    h = (b - a) / n_sub
    s = f(a)
    for i in range(1, n_sub):
        s += (4.0 if i % 2 else 2.0) * f(a + i * h)
    s += f(b)
    return h * s / 3.0


RULES = {"midpoint": midpoint, "trapezoid": trapezoid, "simpson": simpson}


@lru_cache(maxsize=None)
def _gauss_legendre(n):
    x, w = np.polynomial.legendre.leggauss(n)
    return tuple(x.tolist()), tuple(w.tolist())


def _gl_composite(f, a, b, panels, nodes):
    x, w = nodes
    h = (b - a) / panels
    total = 0.0
    for p in range(panels):
        lo = a + p * h
        mid = lo + 0.5 * h
        s = 0.0
        for xi, wi in zip(x, w):
            s += wi * f(mid + 0.5 * h * xi)
        total += 0.5 * h * s
    return total


def reference_integral(
    f: RealFunction,
    a: float,
    b: float,
    tol: float = 1e-10,
    nodes: int = 20,
    max_level: int = 12,
) -> float:
    """High-accuracy integral for error reporting.

    Composite Gauss-Legendre with ``nodes`` points per panel; the panel count
    doubles until two successive estimates agree to ``tol`` (absolute).
    """
    if a == b:
        return 0.0
    if a > b:
        return -reference_integral(f, b, a, tol, nodes, max_level)
    gl = _gauss_legendre(nodes)
    prev = _gl_composite(f, a, b, 1, gl)
    for level in range(1, max_level + 1):
        cur = _gl_composite(f, a, b, 2**level, gl)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    raise ConvergenceError(
        f"reference integral did not converge to {tol:g} after {2**max_level} panels"
    )
