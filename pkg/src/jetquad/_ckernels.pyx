# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled jet kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef double* _load(object seq, Py_ssize_t n1) except NULL:
    cdef double* buf = <double*> malloc(n1 * sizeof(double))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n1):
        buf[i] = seq[i]
    return buf


cdef tuple _dump(double* buf, Py_ssize_t n1):
    cdef Py_ssize_t i
    return tuple([buf[i] for i in range(n1)])


def mul(u, v):
    cdef Py_ssize_t n1 = len(u)
    cdef Py_ssize_t k, i
    cdef double acc
    cdef double* a = _load(u, n1)
    cdef double* b = NULL
    cdef double* out = NULL
    try:
        b = _load(v, n1)
        out = <double*> malloc(n1 * sizeof(double))
        if out == NULL:
            raise MemoryError()
        for k in range(n1):
            acc = 0.0
            for i in range(k + 1):
                acc += a[i] * b[k - i]
            out[k] = acc
        return _dump(out, n1)
    finally:
        free(a)
        free(b)
        free(out)


def recip(u):
    cdef Py_ssize_t n1 = len(u)
    cdef Py_ssize_t k, j
    cdef double acc, u0
    cdef double* a = _load(u, n1)
    cdef double* r = NULL
    try:
        r = <double*> malloc(n1 * sizeof(double))
        if r == NULL:
            raise MemoryError()
        u0 = a[0]
        r[0] = 1.0 / u0
        for k in range(1, n1):
            acc = 0.0
            for j in range(1, k + 1):
                acc += a[j] * r[k - j]
            r[k] = -acc / u0
        return _dump(r, n1)
    finally:
        free(a)
        free(r)


def compose(derivs, u):
    cdef Py_ssize_t n1 = len(u)
    cdef Py_ssize_t n = n1 - 1
    cdef Py_ssize_t k, m, j
    cdef double acc
    cdef double* a = _load(u, n1)
    cdef double* d = NULL
    cdef double* facts = NULL
    cdef double* p = NULL
    cdef double* q = NULL
    cdef double* tmp
    try:
        d = _load(derivs, n1)
        facts = <double*> malloc(n1 * sizeof(double))
        p = <double*> malloc(n1 * sizeof(double))
        q = <double*> malloc(n1 * sizeof(double))
        if facts == NULL or p == NULL or q == NULL:
            raise MemoryError()
        facts[0] = 1.0
        for k in range(1, n1):
            facts[k] = facts[k - 1] * k
        for m in range(n1):
            p[m] = 0.0
        p[0] = d[n] / facts[n]
        for k in range(n - 1, -1, -1):
            for m in range(1, n1):
                acc = 0.0
                for j in range(1, m + 1):
                    acc += p[m - j] * a[j]
                q[m] = acc
            q[0] = d[k] / facts[k]
            tmp = p
            p = q
            q = tmp
        return _dump(p, n1)
    finally:
        free(a)
        free(d)
        free(facts)
        free(p)
        free(q)
