"""Integration through jet evaluation.

The integral of the order-``n`` Taylor polynomial of ``f`` about ``c`` is
recovered from a single jet evaluation: embed ``c`` as
``c + beta_1 e + ... + beta_n e**n`` (:func:`omega`), evaluate ``f`` on it,
and contract the resulting coefficients with the weights returned by
:func:`gamma_weights`.  Composite rules sum these per subinterval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

from jetquad.errors import DomainError, OrderMismatchError, PlanError
from jetquad.jet import Jet, jet_mul

__all__ = [
    "BetaParams",
    "GammaWeights",
    "QuadPlan",
    "Subinterval",
    "IntegrationReport",
    "omega",
    "gamma_weights",
    "gamma_apply",
    "taylor_integral_reference",
    "taylor_derivatives",
    "integrate_single",
    "integrate_composite",
    "make_plan",
]

JetFunction = Callable[[Jet], Jet]


@dataclass(frozen=True)
class BetaParams:
    """Embedding coefficients ``beta_1..beta_n``; ``beta_1`` must be nonzero."""

    beta: Tuple[float, ...]

    def __post_init__(self):
        b = tuple(float(x) for x in self.beta)
        if not b:
            raise PlanError("beta needs at least one entry")
        if b[0] == 0.0:
            raise PlanError("beta_1 must be nonzero (beta_1 != 0 is required)")
        if not all(math.isfinite(x) for x in b):
            raise PlanError("beta entries must be finite")
        object.__setattr__(self, "beta", b)

    @classmethod
    def default(cls, order: int) -> "BetaParams":
        """``(1, 0, ..., 0)``."""
        return cls((1.0,) + (0.0,) * (order - 1))

    @property
    def order(self) -> int:
        return len(self.beta)

    def at_order(self, order: int) -> "BetaParams":
        """Truncate, or pad with zeros, to ``order`` entries."""
        if order == self.order:
            return self
        if order < self.order:
            return BetaParams(self.beta[:order])
        return BetaParams(self.beta + (0.0,) * (order - self.order))


@dataclass(frozen=True)
class GammaWeights:
    span: float
    A: Tuple[float, ...]

    @property
    def order(self) -> int:
        return len(self.A)


@dataclass(frozen=True)
class QuadPlan:
    """Partition of ``[a, b]`` with one center and Taylor order per piece."""

    a: float
    b: float
    breaks: Tuple[float, ...]
    centers: Tuple[float, ...]
    orders: Tuple[int, ...]

    def __post_init__(self):
        a, b = float(self.a), float(self.b)
        breaks = tuple(float(x) for x in self.breaks)
        centers = tuple(float(x) for x in self.centers)
        orders = tuple(self.orders)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "breaks", breaks)
        object.__setattr__(self, "centers", centers)
        object.__setattr__(self, "orders", orders)

        if not (math.isfinite(a) and math.isfinite(b)) or not a < b:
            raise PlanError(f"need finite a < b, got a={a!r}, b={b!r}")
        edges = (a,) + breaks + (b,)
        for lo, hi in zip(edges, edges[1:]):
            if not lo < hi:
                raise PlanError(
                    f"breakpoints must be strictly increasing inside ({a!r}, {b!r})"
                )
        n_sub = len(breaks) + 1
        if len(centers) != n_sub:
            raise PlanError(f"{n_sub} subintervals need {n_sub} centers, got {len(centers)}")
        if len(orders) != n_sub:
            raise PlanError(f"{n_sub} subintervals need {n_sub} orders, got {len(orders)}")
        for i, c in enumerate(centers):
            lo, hi = edges[i], edges[i + 1]
            if not lo <= c <= hi:
                raise PlanError(f"center {c!r} of subinterval {i} lies outside [{lo!r}, {hi!r}]")
        for k in orders:
            if not isinstance(k, int) or isinstance(k, bool) or k < 1:
                raise PlanError(f"orders must be positive integers, got {k!r}")

    @property
    def n_sub(self) -> int:
        return len(self.centers)

    def edges(self) -> Tuple[float, ...]:
        return (self.a,) + self.breaks + (self.b,)

    def subintervals(self):
        e = self.edges()
        for i in range(self.n_sub):
            yield i, e[i], e[i + 1], self.centers[i], self.orders[i]


@dataclass(frozen=True)
class Subinterval:
    index: int
    a: float
    b: float
    center: float
    order: int
    value: float


@dataclass
class IntegrationReport:
    """Outcome of one integration run, as rendered by the CLI."""

    method: str
    a: float
    b: float
    subintervals: List[Subinterval]
    total: float
    breaks: Tuple[float, ...] = ()
    centers: Tuple[float, ...] = ()
    orders: Tuple[int, ...] = ()
    beta: Optional[Tuple[float, ...]] = None
    n_sub: Optional[int] = None
    reference: Optional[float] = None
    signed_error: Optional[float] = field(default=None)

    def with_reference(self, reference: Optional[float]) -> "IntegrationReport":
        self.reference = reference
        self.signed_error = None if reference is None else self.total - reference
        return self


def omega(c: float, beta: BetaParams) -> Jet:
    return Jet((float(c),) + beta.beta)


def _moment(a: float, b: float, c: float, k: int) -> float:
    """``((b-c)**(k+1) - (a-c)**(k+1)) / (k+1)!``: integral of (x-c)**k / k!."""
    return ((b - c) ** (k + 1) - (a - c) ** (k + 1)) / math.factorial(k + 1)


def _composition_matrix(beta: BetaParams) -> List[List[float]]:
    """``C[i][k]``: multiplier of f^(k)(c) in the e**i coefficient of f(omega(c))."""
    n = beta.order
    p = Jet((0.0,) + beta.beta)
    C = [[0.0] * (n + 1) for _ in range(n + 1)]
    power = p
    for k in range(1, n + 1):
        if k > 1:
            power = jet_mul(power, p)
        inv_fact = 1.0 / math.factorial(k)
        for i in range(k, n + 1):
            C[i][k] = power[i] * inv_fact
    return C


def gamma_weights(a: float, b: float, c: float, beta: BetaParams) -> GammaWeights:
    """Weights ``A_1..A_n`` such that ``span*y_0 + sum A_i y_i`` integrates T_{n;c}.

    Solves the upper-triangular system
    ``sum_{i>=k} A_i C[i][k] = moment_k`` from ``k = n`` down to ``1``.
    """
    a, b, c = float(a), float(b), float(c)
    n = beta.order
    C = _composition_matrix(beta)
    A = [0.0] * (n + 1)
    for k in range(n, 0, -1):
        acc = _moment(a, b, c, k)
        for i in range(k + 1, n + 1):
            acc -= A[i] * C[i][k]
        A[k] = acc / C[k][k]
    return GammaWeights(span=b - a, A=tuple(A[1:]))


def gamma_apply(w: GammaWeights, y: Jet) -> float:
    if y.order != w.order:
        raise OrderMismatchError(
            f"jet of order {y.order} contracted with {w.order} weights"
        )
    total = w.span * y[0]
    for Ai, yi in zip(w.A, y.coeffs[1:]):
        total += Ai * yi
    return total


def taylor_integral_reference(derivs: Sequence[float], a: float, b: float, c: float) -> float:
    """Closed-form integral over ``[a, b]`` of the Taylor polynomial with these derivatives."""
    total = 0.0
    for i, d in enumerate(derivs):
        total += _moment(a, b, c, i) * d
    return total


def taylor_derivatives(f: JetFunction, c: float, n: int) -> List[float]:
    """``[f(c), ..., f^(n)(c)]`` read off ``f(c + e)``."""
    y = f(Jet.variable(float(c), n))
    out = []
    fact = 1.0
    for i in range(n + 1):
        out.append(y[i] * fact)
        fact *= i + 1
    return out


def _evaluate(f: JetFunction, u: Jet) -> Jet:
    y = f(u)
    if isinstance(y, Jet):
        if y.order != u.order:
            raise OrderMismatchError("integrand changed the jet order")
        return y
    # constant integrands may return a bare number
    return Jet.constant(float(y), u.order)


def integrate_single(
    f: JetFunction,
    a: float,
    b: float,
    c: float,
    beta: Optional[BetaParams] = None,
    order: int = 5,
) -> float:
    """Integral over ``[a, b]`` of the Taylor polynomial of ``f`` about ``c``.

    ``f`` maps jets to jets (the functions in :mod:`jetquad.elementary` and jet
    arithmetic compose freely).  ``beta`` defaults to ``(1, 0, ..., 0)`` at
    ``order``; when given, its length sets the order.
    """
    if beta is None:
        beta = BetaParams.default(order)
    y = _evaluate(f, omega(c, beta))
    return gamma_apply(gamma_weights(a, b, c, beta), y)


def integrate_composite(
    f: JetFunction,
    plan: QuadPlan,
    beta: Optional[BetaParams] = None,
    reference: Optional[float] = None,
    executor=None,
) -> IntegrationReport:
    """Sum of per-subinterval Taylor integrals, reduced in ascending index order.

    ``beta`` is truncated or zero-padded to each subinterval's order; it
    defaults to ``(1, 0, ..., 0)``.  An optional ``concurrent.futures``
    executor evaluates subintervals in parallel without changing the result.
    """
    if beta is None:
        beta = BetaParams.default(max(plan.orders))

    def piece(i, lo, hi, c, k):
        try:
            return integrate_single(f, lo, hi, c, beta.at_order(k))
        except DomainError as exc:
            raise DomainError(
                f"subinterval {i} [{lo!r}, {hi!r}], center {c!r}: {exc}",
                where=exc.where,
                index=i,
            ) from exc

    specs = list(plan.subintervals())
    if executor is None:
        values = [piece(*s) for s in specs]
    else:
        futures = [executor.submit(piece, *s) for s in specs]
        values = [fut.result() for fut in futures]

    subs = []
    total = 0.0
    for (i, lo, hi, c, k), v in zip(specs, values):
        subs.append(Subinterval(i, lo, hi, c, k, v))
        total += v
    report = IntegrationReport(
        method="auto",
        a=plan.a,
        b=plan.b,
        subintervals=subs,
        total=total,
        breaks=plan.breaks,
        centers=plan.centers,
        orders=plan.orders,
        beta=beta.beta,
        n_sub=plan.n_sub,
    )
    return report.with_reference(reference)


def make_plan(a: float, b: float, n_sub: int, center_strategy: str = "mid", order: int = 5) -> QuadPlan:
    """Uniform partition with centers at the left end, midpoint, or right end."""
    if n_sub < 1:
        raise PlanError("n_sub must be >= 1")
    a, b = float(a), float(b)
    h = (b - a) / n_sub
    edges = [a + i * h for i in range(n_sub)] + [b]
    if center_strategy == "left":
        centers = edges[:-1]
    elif center_strategy == "right":
        centers = edges[1:]
    elif center_strategy == "mid":
        centers = [0.5 * (lo + hi) for lo, hi in zip(edges, edges[1:])]
    else:
        raise PlanError(f"unknown center strategy {center_strategy!r}")
    return QuadPlan(a, b, tuple(edges[1:-1]), tuple(centers), (order,) * n_sub)
