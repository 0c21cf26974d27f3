"""Order-5 closed forms used as independent checks by the test suite.

These transcribe hand-expanded formulas for the order-5 jet extensions of
the elementary functions and for the order-5 integration weights.  They are
deliberately written out term by term rather than computed, so that they
share no code with the generic machinery they check.

The transcribed e^5 term for arctan is known to disagree with the derivative
recurrence; :func:`elementary_order5` reproduces it verbatim and callers
should only compare arctan coefficients 0..4.
"""

import math

from jetquad.jet import Jet


def elementary_order5(name, x, a):
    """Closed-form extension of ``name`` at ``x + a1 e + ... + a5 e^5``."""
    a1, a2, a3, a4, a5 = a
    if name == "recip":
        if x == 0:
            raise ZeroDivisionError("recip oracle at 0")
        y = [
            1 / x,
            -a1 / x**2,
            a1**2 / x**3 - a2 / x**2,
            -(a1**3) / x**4 + 2 * a1 * a2 / x**3 - a3 / x**2,
            a1**4 / x**5 - 3 * a1**2 * a2 / x**4 + (2 * a1 * a3 + a2**2) / x**3 - a4 / x**2,
            -(a1**5) / x**6
            + 4 * a1**3 * a2 / x**5
            - 3 * (a1**2 * a3 + a1 * a2**2) / x**4
            + 2 * (a1 * a4 + a2 * a3) / x**3
            - a5 / x**2,
        ]
    elif name == "exp":
        e = math.exp(x)
        y = [
            e,
            a1 * e,
            (a1**2 / 2 + a2) * e,
            (a1**3 / 6 + a1 * a2 + a3) * e,
            (a1**4 / 24 + a1**2 * a2 / 2 + a1 * a3 + a2**2 / 2 + a4) * e,
            (
                a1**5 / 120
                + a1**3 * a2 / 6
                + (a1**2 * a3 + a1 * a2**2) / 2
                + a1 * a4
                + a2 * a3
                + a5
            )
            * e,
        ]
    elif name == "sin":
        s, c = math.sin(x), math.cos(x)
        y = [
            s,
            a1 * c,
            -(a1**2) / 2 * s + a2 * c,
            -(a1**3) / 6 * c - a1 * a2 * s + a3 * c,
            a1**4 / 24 * s - a1**2 * a2 / 2 * c - (a1 * a3 + a2**2 / 2) * s + a4 * c,
            a1**5 / 120 * c
            + a1**3 * a2 / 6 * s
            - (a1**2 * a3 + a1 * a2**2) / 2 * c
            - (a1 * a4 + a2 * a3) * s
            + a5 * c,
        ]
    elif name == "cos":
        s, c = math.sin(x), math.cos(x)
        y = [
            c,
            -a1 * s,
            -(a1**2) / 2 * c - a2 * s,
            a1**3 / 6 * s - a1 * a2 * c - a3 * s,
            a1**4 / 24 * c + a1**2 * a2 / 2 * s - (a1 * a3 + a2**2 / 2) * c - a4 * s,
            -(a1**5) / 120 * s
            + a1**3 * a2 / 6 * c
            + (a1**2 * a3 + a1 * a2**2) / 2 * s
            - (a1 * a4 + a2 * a3) * c
            - a5 * s,
        ]
    elif name == "ln":
        if x <= 0:
            raise ValueError("ln oracle needs x > 0")
        y = [
            math.log(x),
            a1 / x,
            -(a1**2) / (2 * x**2) + a2 / x,
            a1**3 / (3 * x**3) - a1 * a2 / x**2 + a3 / x,
            -(a1**4) / (4 * x**4) + a1**2 * a2 / x**3 - (2 * a1 * a3 + a2**2) / (2 * x**2) + a4 / x,
            a1**5 / (5 * x**5)
            - a1**3 * a2 / x**4
            + (a1**2 * a3 + a1 * a2**2) / x**3
            - (a1 * a4 + a2 * a3) / x**2
            + a5 / x,
        ]
    elif name == "arctan":
        s = 1 + x**2
        y = [
            math.atan(x),
            a1 / s,
            -(a1**2) * x / s**2 + a2 / s,
            a1**3 * (3 * x**2 - 1) / (3 * s**3) - 2 * a1 * a2 * x / s**2 + a3 / s,
            a1**4 * (x - x**3) / s**4
            + a1**2 * a2 * (3 * x**2 - 1) / s**3
            - (2 * a1 * a3 + a2**2) * x / s**2
            + a4 / s,
            # transcribed verbatim; does not match the true fifth coefficient
            a1**5 * (1 - 10 * x**2 + 5 * x**4) / (5 * s**5)
            + 4 * a1**3 * a2 * (x - x**3) / s**4
            + (a1**2 * a3 + a1 * a2**2) * (3 * x**2 - 1) / s**2
            - (a1 * a4 + a2 * a3) * x / s**2
            + a5 / s,
        ]
    else:
        raise KeyError(name)
    return Jet(y)


def gamma_weights_order5(a, b, c, beta):
    """Closed-form order-5 weights ``(A1, ..., A5)``."""
    b1, b2, b3, b4, b5 = beta
    m = lambda k: (b - c) ** k - (a - c) ** k  # noqa: E731
    A5 = m(6) / (6 * b1**5)
    A4 = m(5) / (5 * b1**4) - 4 * b2 * A5 / b1
    A3 = m(4) / (4 * b1**3) - 3 * b2 * A4 / b1 - 3 * (b3 / b1 + b2**2 / b1**2) * A5
    A2 = (
        m(3) / (3 * b1**2)
        - 2 * b2 * A3 / b1
        - (2 * b3 / b1 + b2**2 / b1**2) * A4
        - 2 * (b4 / b1 + b2 * b3 / b1**2) * A5
    )
    A1 = m(2) / (2 * b1) - b2 * A2 / b1 - b3 * A3 / b1 - b4 * A4 / b1 - b5 * A5 / b1
    return (A1, A2, A3, A4, A5)


def taylor_integral_order5(derivs, a, b, c):
    """Direct sum of the antiderivative of the order-5 Taylor polynomial."""
    return sum(
        ((b - c) ** (i + 1) - (a - c) ** (i + 1)) / math.factorial(i + 1) * derivs[i]
        for i in range(6)
    )
