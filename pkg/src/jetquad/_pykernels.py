"""Pure-Python jet kernels.

Reference implementation of the hot loops; ``_ckernels.pyx`` mirrors it
operation for operation so both backends produce bit-identical results.
Inputs are tuples of floats of equal length; validation is the caller's job.
"""

BACKEND = "python"


def mul(u, v):
    n1 = len(u)
    out = []
    for k in range(n1):
        acc = 0.0
        for i in range(k + 1):
            acc += u[i] * v[k - i]
        out.append(acc)
    return tuple(out)


def recip(u):
    n1 = len(u)
    u0 = u[0]
    r = [1.0 / u0]
    for k in range(1, n1):
        acc = 0.0
        for j in range(1, k + 1):
            acc += u[j] * r[k - j]
        r.append(-acc / u0)
    return tuple(r)


def compose(derivs, u):
    """Evaluate sum_k derivs[k]/k! * w**k with w = u - u[0], by Horner."""
    n1 = len(u)
    n = n1 - 1
    facts = [1.0]
    for k in range(1, n1):
        facts.append(facts[k - 1] * k)
    p = [0.0] * n1
    p[0] = derivs[n] / facts[n]
    for k in range(n - 1, -1, -1):
        # p <- p * w; w has zero constant term so the j = 0 product is skipped
        q = [0.0] * n1
        for m in range(1, n1):
            acc = 0.0
            for j in range(1, m + 1):
                acc += p[m - j] * u[j]
            q[m] = acc
        q[0] = derivs[k] / facts[k]
        p = q
    return tuple(p)
