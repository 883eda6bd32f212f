# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled convolution of bivariate term maps.

Coefficients are multiplied in 64-bit machine integers while every partial
sum fits; the first overflow abandons the fast path and the product is redone
with Python integers, so results are always exact.
"""
from libc.stdlib cimport calloc, malloc, free

cdef extern from *:
    """
    static inline int hl_fma_ovf(long long a, long long b, long long *acc) {
        long long t;
        if (__builtin_mul_overflow(a, b, &t)) return 1;
        return __builtin_add_overflow(*acc, t, acc);
    }
    """
    int hl_fma_ovf(long long a, long long b, long long *acc) nogil


cdef struct _Terms:
    Py_ssize_t n
    long* p
    long* q
    long long* c


cdef int _unpack(dict x, _Terms* out) except -1:
    cdef Py_ssize_t i = 0
    out.n = len(x)
    out.p = <long*>malloc(out.n * sizeof(long))
    out.q = <long*>malloc(out.n * sizeof(long))
    out.c = <long long*>malloc(out.n * sizeof(long long))
    if out.p == NULL or out.q == NULL or out.c == NULL:
        raise MemoryError()
    for key, coeff in x.items():
        out.p[i] = key[0]
        out.q[i] = key[1]
        out.c[i] = coeff  # raises OverflowError for big coefficients
        i += 1
    return 0


cdef void _release(_Terms* t):
    free(t.p)
    free(t.q)
    free(t.c)


cdef dict _mul_fast(dict x, dict y):
    """Return the product, or None when a machine integer would overflow."""
    cdef _Terms tx, ty
    cdef long long* dense = NULL
    cdef Py_ssize_t i, j, idx, width, height
    cdef long maxpx = 0, maxqx = 0, maxpy = 0, maxqy = 0
    cdef bint overflow = False
    cdef dict result
    tx.p = tx.q = NULL
    tx.c = NULL
    ty.p = ty.q = NULL
    ty.c = NULL
    try:
        try:
            _unpack(x, &tx)
            _unpack(y, &ty)
        except OverflowError:
            return None
        for i in range(tx.n):
            if tx.p[i] > maxpx:
                maxpx = tx.p[i]
            if tx.q[i] > maxqx:
                maxqx = tx.q[i]
        for j in range(ty.n):
            if ty.p[j] > maxpy:
                maxpy = ty.p[j]
            if ty.q[j] > maxqy:
                maxqy = ty.q[j]
        height = maxpx + maxpy + 1
        width = maxqx + maxqy + 1
        dense = <long long*>calloc(height * width, sizeof(long long))
        if dense == NULL:
            raise MemoryError()
        with nogil:
            for i in range(tx.n):
                for j in range(ty.n):
                    idx = (tx.p[i] + ty.p[j]) * width + tx.q[i] + ty.q[j]
                    if hl_fma_ovf(tx.c[i], ty.c[j], &dense[idx]):
                        overflow = True
                        break
                if overflow:
                    break
        if overflow:
            return None
        result = {}
        for i in range(height):
            for j in range(width):
                if dense[i * width + j] != 0:
                    result[(i, j)] = dense[i * width + j]
        return result
    finally:
        free(dense)
        _release(&tx)
        _release(&ty)


cdef dict _mul_object(dict x, dict y):
    cdef dict acc = {}
    cdef list yitems = list(y.items())
    cdef long p, q, s, t
    for key, c in x.items():
        p = key[0]
        q = key[1]
        for key2, e in yitems:
            s = key2[0]
            t = key2[1]
            k = (p + s, q + t)
            acc[k] = acc.get(k, 0) + c * e
    return {k: c for k, c in acc.items() if c}


def mul_terms(dict x, dict y):
    if not x or not y:
        return {}
    result = _mul_fast(x, y)
    if result is None:
        result = _mul_object(x, y)
    return result
