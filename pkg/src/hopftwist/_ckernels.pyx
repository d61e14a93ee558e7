# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled sparse kernels; same contract as ``_pykernels``.

Residues below 2**31 go through a dense C accumulator, everything else
(rationals, huge primes) through typed loops over Python objects.
"""
from libc.stdlib cimport calloc, malloc, free

BACKEND = "cython"

cdef long long _SMALL = 2147483648


def matmul(list f_cols, list g_cols, Py_ssize_t nrows, long long p):
    if 0 < p < _SMALL:
        return _matmul_mod(f_cols, g_cols, nrows, p)
    return _matmul_obj(f_cols, g_cols, p)


def kron(list f_cols, Py_ssize_t f_nrows, list g_cols, Py_ssize_t g_nrows, long long p):
    if 0 < p < _SMALL:
        return _kron_mod(f_cols, g_cols, g_nrows, p)
    return _kron_obj(f_cols, g_cols, g_nrows, p)


cdef list _matmul_mod(list f_cols, list g_cols, Py_ssize_t nrows, long long p):
    cdef long long* acc = <long long*> calloc(nrows + 1, sizeof(long long))
    cdef char* seen = <char*> calloc(nrows + 1, sizeof(char))
    cdef Py_ssize_t* touched = <Py_ssize_t*> malloc((nrows + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t ntouched, r, i
    cdef long long gv, fv, v
    cdef dict gcol, fcol, col
    cdef list out = []
    if acc == NULL or seen == NULL or touched == NULL:
        free(acc); free(seen); free(touched)
        raise MemoryError()
    try:
        for gcol in g_cols:
            ntouched = 0
            for k, gvo in gcol.items():
                gv = gvo
                fcol = <dict> f_cols[k]
                for ro, fvo in fcol.items():
                    r = ro
                    fv = fvo
                    if not seen[r]:
                        seen[r] = 1
                        touched[ntouched] = r
                        ntouched += 1
                    acc[r] = (acc[r] + fv * gv) % p
            col = {}
            for i in range(ntouched):
                r = touched[i]
                v = acc[r]
                if v:
                    col[r] = v
                acc[r] = 0
                seen[r] = 0
            out.append(col)
    finally:
        free(acc)
        free(seen)
        free(touched)
    return out


cdef list _matmul_obj(list f_cols, list g_cols, long long p):
    cdef dict gcol, fcol, acc, col
    cdef list out = []
    for gcol in g_cols:
        acc = {}
        for k, gv in gcol.items():
            fcol = <dict> f_cols[k]
            for r, fv in fcol.items():
                if r in acc:
                    acc[r] = acc[r] + fv * gv
                else:
                    acc[r] = fv * gv
        col = {}
        if p:
            for r, v in acc.items():
                v = v % p
                if v:
                    col[r] = v
        else:
            for r, v in acc.items():
                if v:
                    col[r] = v
        out.append(col)
    return out


cdef list _kron_mod(list f_cols, list g_cols, Py_ssize_t g_nrows, long long p):
    cdef list out = []
    cdef dict fc, gc, col
    cdef Py_ssize_t r1, r2, base
    cdef long long a, b
    for fc in f_cols:
        for gc in g_cols:
            col = {}
            for r1o, ao in fc.items():
                r1 = r1o
                a = ao
                base = r1 * g_nrows
                for r2o, bo in gc.items():
                    r2 = r2o
                    b = bo
                    col[base + r2] = (a * b) % p
            out.append(col)
    return out


cdef list _kron_obj(list f_cols, list g_cols, Py_ssize_t g_nrows, long long p):
    cdef list out = []
    cdef dict fc, gc, col
    cdef Py_ssize_t r1, base
    for fc in f_cols:
        for gc in g_cols:
            col = {}
            for r1o, a in fc.items():
                r1 = r1o
                base = r1 * g_nrows
                if p:
                    for r2, b in gc.items():
                        col[base + r2] = (a * b) % p
                else:
                    for r2, b in gc.items():
                        col[base + r2] = a * b
            out.append(col)
    return out
