"""Truncated polynomial algebra R^(n+1).

A :class:`Jet` of order ``n`` is ``y_0 + y_1 e + ... + y_n e**n`` where the
generator ``e`` satisfies ``e**(n+1) = 0``.  Evaluating a smooth function on a
jet propagates its Taylor coefficients, which is what the integration layer
builds on.
"""

from __future__ import annotations

import math
from numbers import Real
from typing import Iterable, Sequence

from jetquad import _kernels
from jetquad.errors import DomainError, OrderMismatchError, PoleError

__all__ = [
    "Jet",
    "jet_add",
    "jet_mul",
    "jet_scale",
    "jet_recip",
    "universal_extend",
    "ipow",
]


class Jet:
    """Immutable element of the truncated polynomial algebra.

    Parameters
    ----------
    coeffs : iterable of float
        ``coeffs[i]`` is the coefficient of ``e**i``; the order is
        ``len(coeffs) - 1``.

    Arithmetic with plain reals treats them as constant jets.  Arithmetic
    between jets of different order raises :class:`OrderMismatchError`.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[float]):
        c = tuple(float(x) for x in coeffs)
        if not c:
            raise ValueError("a jet needs at least one coefficient")
        for x in c:
            if not math.isfinite(x):
                raise DomainError(f"non-finite jet coefficient {x!r}")
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("Jet is immutable")

    @classmethod
    def constant(cls, x: float, order: int) -> "Jet":
        return cls((x,) + (0.0,) * order)

    @classmethod
    def variable(cls, x: float, order: int) -> "Jet":
        """``x + e``; its image under a function carries f^(k)(x)/k!."""
        if order == 0:
            return cls((x,))
        return cls((x, 1.0) + (0.0,) * (order - 1))

    @classmethod
    def zero(cls, order: int) -> "Jet":
        return cls((0.0,) * (order + 1))

    @classmethod
    def one(cls, order: int) -> "Jet":
        return cls.constant(1.0, order)

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def real(self) -> float:
        return self._c[0]

    def nilpotent_part(self) -> "Jet":
        return Jet((0.0,) + self._c[1:])

    def __len__(self):
        return len(self._c)

    def __getitem__(self, i):
        return self._c[i]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if isinstance(other, Jet):
            return self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"Jet({list(self._c)!r})"

    def __str__(self):
        terms = [repr(self._c[0])]
        for i, y in enumerate(self._c[1:], start=1):
            if y:
                terms.append(f"{y!r}*e^{i}")
        return " + ".join(terms)

    def _coerce(self, other) -> "Jet | None":
        if isinstance(other, Jet):
            return other
        if isinstance(other, Real):
            return Jet.constant(float(other), self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else jet_add(self, o)

    __radd__ = __add__

    def __neg__(self):
        return Jet(-x for x in self._c)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else jet_add(self, -o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else jet_add(o, -self)

    def __mul__(self, other):
        if isinstance(other, Jet):
            return jet_mul(self, other)
        if isinstance(other, Real):
            return jet_scale(float(other), self)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return jet_mul(self, jet_recip(other))
        if isinstance(other, Real):
            if other == 0:
                raise PoleError("division of a jet by zero")
            return jet_scale(1.0 / float(other), self)
        return NotImplemented

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else jet_mul(o, jet_recip(self))

    def __pow__(self, k):
        if not isinstance(k, int) or isinstance(k, bool) or k < 0:
            return NotImplemented
        return ipow(self, k)


def _check_orders(u: Jet, v: Jet) -> None:
    if len(u._c) != len(v._c):
        raise OrderMismatchError(
            f"jet orders differ: {u.order} vs {v.order}"
        )


def jet_add(u: Jet, v: Jet) -> Jet:
    _check_orders(u, v)
    return Jet(a + b for a, b in zip(u._c, v._c))


def jet_mul(u: Jet, v: Jet) -> Jet:
    """Truncated product: products landing above ``e**n`` are dropped."""
    _check_orders(u, v)
    return Jet(_kernels.mul(u._c, v._c))


def jet_scale(r: float, u: Jet) -> Jet:
    return Jet(r * x for x in u._c)


def jet_recip(u: Jet) -> Jet:
    """Multiplicative inverse; raises :class:`PoleError` when ``u.real == 0``."""
    if u._c[0] == 0.0:
        raise PoleError("reciprocal of a jet with zero real part", where="recip")
    return Jet(_kernels.recip(u._c))


def universal_extend(derivs: Sequence[float], u: Jet) -> Jet:
    """Lift a function, given by its derivatives at ``u.real``, to the jet ``u``.

    Computes ``sum_k derivs[k] / k! * w**k`` where ``w`` is the nilpotent part
    of ``u``.  ``derivs`` must hold ``f(x), f'(x), ..., f^(n)(x)`` at
    ``x = u.real`` for ``n = u.order``.
    """
    d = tuple(float(x) for x in derivs)
    if len(d) != len(u._c):
        raise OrderMismatchError(
            f"{len(d)} derivatives supplied for a jet of order {u.order}"
        )
    return Jet(_kernels.compose(d, u._c))


def ipow(base, k: int):
    """``base**k`` for integer ``k >= 0`` by square-and-multiply.

    Works for floats and jets alike; both follow the same multiplication
    chain, so the real part of a jet power equals the float power exactly.
    """
    if k < 0:
        raise ValueError("negative exponent")
    result = None
    square = base
    while k:
        if k & 1:
            result = square if result is None else result * square
        k >>= 1
        if k:
            square = square * square
    if result is None:
        return Jet.one(base.order) if isinstance(base, Jet) else 1.0
    return result
