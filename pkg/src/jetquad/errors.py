"""Exception types shared across the package."""


class JetquadError(Exception):
    """Base class for all errors raised by jetquad."""


class OrderMismatchError(JetquadError, ValueError):
    """Two jets (or a jet and a weight vector) have different truncation orders."""


class DomainError(JetquadError, ValueError):
    """A function was evaluated outside its domain.

    ``where`` names the offending subexpression or function when known, and
    ``index`` is the subinterval index when raised from a composite rule.
    """

    def __init__(self, message, where=None, index=None):
        super().__init__(message)
        self.where = where
        self.index = index


class PoleError(DomainError, ZeroDivisionError):
    """Reciprocal of a jet whose real part is zero."""


class PlanError(JetquadError, ValueError):
    """A quadrature plan or embedding parameter set violates its invariants."""


class ParseError(JetquadError, ValueError):
    """Malformed integrand expression; ``offset`` is the 1-based character column."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ConvergenceError(JetquadError, RuntimeError):
    """The reference integrator hit its refinement cap without converging."""
