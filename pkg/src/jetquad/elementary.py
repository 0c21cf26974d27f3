"""Elementary functions on reals and jets.

Each function is described by a derivative generator: ``derivs(fn, x, n)``
returns ``[f(x), f'(x), ..., f^(n)(x)]`` from a closed recurrence, and
``extend(fn, u)`` lifts it to a jet through :func:`universal_extend`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List

from jetquad.errors import DomainError, PoleError
from jetquad.jet import Jet, universal_extend

__all__ = [
    "ElemFn",
    "EXP",
    "SIN",
    "COS",
    "LN",
    "RECIP",
    "ARCTAN",
    "power",
    "by_name",
    "derivs",
    "extend",
    "exp",
    "sin",
    "cos",
    "ln",
    "recip",
    "atan",
]


@dataclass(frozen=True)
class ElemFn:
    """An elementary function tag; ``k`` is the exponent for ``pow``."""

    tag: str
    k: int = 0

    def in_domain(self, x: float) -> bool:
        if self.tag == "ln":
            return x > 0.0
        if self.tag == "recip":
            return x != 0.0
        return True

    @property
    def name(self) -> str:
        return f"pow_{self.k}" if self.tag == "pow" else self.tag

    def __call__(self, x):
        if isinstance(x, Jet):
            return extend(self, x)
        return derivs(self, x, 0)[0]


EXP = ElemFn("exp")
SIN = ElemFn("sin")
COS = ElemFn("cos")
LN = ElemFn("ln")
RECIP = ElemFn("recip")
ARCTAN = ElemFn("arctan")

_BY_NAME = {f.tag: f for f in (EXP, SIN, COS, LN, RECIP, ARCTAN)}
_BY_NAME["atan"] = ARCTAN


def power(k: int) -> ElemFn:
    if k < 0:
        raise ValueError("pow_k requires k >= 0")
    return ElemFn("pow", k)


def by_name(name: str) -> ElemFn:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown elementary function {name!r}") from None


def _check_domain(fn: ElemFn, x: float) -> None:
    if fn.in_domain(x):
        return
    if fn.tag == "recip":
        raise PoleError("recip is undefined at 0", where=fn.name)
    raise DomainError(f"{fn.name} is undefined at {x!r}", where=fn.name)


def _arctan_derivs(x: float, n: int) -> List[float]:
    # r = 1/(1+x^2) solves (1+x^2) r = 1; differentiating k times gives
    # (1+x^2) r^(k) + 2k x r^(k-1) + k(k-1) r^(k-2) = 0.
    out = [math.atan(x)]
    if n == 0:
        return out
    s = 1.0 + x * x
    r = [1.0 / s]
    for k in range(1, n):
        t = 2.0 * k * x * r[k - 1]
        if k >= 2:
            t += k * (k - 1) * r[k - 2]
        r.append(-t / s)
    return out + r


def derivs(fn: ElemFn, x: float, n: int) -> List[float]:
    """Return ``[f(x), f'(x), ..., f^(n)(x)]``."""
    x = float(x)
    _check_domain(fn, x)
    tag = fn.tag
    try:
        if tag == "exp":
            return [math.exp(x)] * (n + 1)
        if tag in ("sin", "cos"):
            s, c = math.sin(x), math.cos(x)
            cycle = [s, c, -s, -c] if tag == "sin" else [c, -s, -c, s]
            return [cycle[i % 4] for i in range(n + 1)]
        if tag == "ln":
            out = [math.log(x)]
            fact = 1.0
            for i in range(1, n + 1):
                out.append((-1.0) ** (i - 1) * fact / x**i)
                fact *= i
            return out
        if tag == "recip":
            out = []
            fact = 1.0
            for i in range(n + 1):
                out.append((-1.0) ** i * fact / x ** (i + 1))
                fact *= i + 1
            return out
        if tag == "arctan":
            return _arctan_derivs(x, n)
        if tag == "pow":
            out = []
            falling = 1.0
            for i in range(n + 1):
                if i > fn.k:
                    out.append(0.0)
                    continue
                out.append(falling * x ** (fn.k - i))
                falling *= fn.k - i
            return out
    except OverflowError as exc:
        raise DomainError(f"{fn.name} overflows at {x!r}", where=fn.name) from exc
    raise ValueError(f"unknown elementary function tag {tag!r}")


def extend(fn: ElemFn, u: Jet) -> Jet:
    """Lift ``fn`` to the jet ``u`` (expansion point ``u.real``)."""
    return universal_extend(derivs(fn, u.real, u.order), u)


def _generic(fn: ElemFn) -> Callable:
    def apply(x):
        return fn(x)

    apply.__name__ = fn.name
    apply.__doc__ = f"{fn.name} on floats or jets."
    return apply


exp = _generic(EXP)
sin = _generic(SIN)
cos = _generic(COS)
ln = _generic(LN)
recip = _generic(RECIP)
atan = _generic(ARCTAN)
