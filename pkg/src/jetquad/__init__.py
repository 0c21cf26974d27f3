"""Definite integrals from truncated Taylor (jet) arithmetic.

A smooth integrand evaluated on the jet ``c + beta_1 e + ... + beta_n e**n``
yields coefficients whose weighted sum is the exact integral of its order-n
Taylor polynomial about ``c``.  Composite versions over a partition, the
classical midpoint/trapezoid/Simpson rules, an expression parser, and a CLI
are included.
"""

from jetquad._kernels import BACKEND
from jetquad.autoint import (
    BetaParams,
    GammaWeights,
    IntegrationReport,
    QuadPlan,
    gamma_apply,
    gamma_weights,
    integrate_composite,
    integrate_single,
    make_plan,
    omega,
    taylor_derivatives,
    taylor_integral_reference,
)
from jetquad.classical import midpoint, reference_integral, simpson, trapezoid
from jetquad.elementary import ElemFn, derivs, extend
from jetquad.errors import (
    ConvergenceError,
    DomainError,
    JetquadError,
    OrderMismatchError,
    ParseError,
    PlanError,
    PoleError,
)
from jetquad.expr import eval_jet, eval_real, parse, render
from jetquad.jet import Jet, jet_add, jet_mul, jet_recip, jet_scale, universal_extend

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BetaParams",
    "ConvergenceError",
    "DomainError",
    "ElemFn",
    "GammaWeights",
    "IntegrationReport",
    "Jet",
    "JetquadError",
    "OrderMismatchError",
    "ParseError",
    "PlanError",
    "PoleError",
    "QuadPlan",
    "derivs",
    "eval_jet",
    "eval_real",
    "extend",
    "gamma_apply",
    "gamma_weights",
    "integrate_composite",
    "integrate_single",
    "jet_add",
    "jet_mul",
    "jet_recip",
    "jet_scale",
    "make_plan",
    "midpoint",
    "omega",
    "parse",
    "reference_integral",
    "render",
    "simpson",
    "taylor_derivatives",
    "taylor_integral_reference",
    "trapezoid",
    "universal_extend",
]
