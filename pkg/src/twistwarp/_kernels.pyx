# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled scan kernels; same contracts as ``_kernels_py``."""

from libc.stdlib cimport calloc, free
from libc.string cimport memset

cdef enum:
    BAR = 0
    UNDER = 2


def warping_degrees(kinds, ids, Py_ssize_t ncross):
    cdef Py_ssize_t size = len(kinds)
    if size == 0:
        return [0]
    cdef int *kk = <int *> calloc(size, sizeof(int))
    cdef int *ii = <int *> calloc(size, sizeof(int))
    cdef char *seen = <char *> calloc(ncross + 1, sizeof(char))
    if kk == NULL or ii == NULL or seen == NULL:
        free(kk); free(ii); free(seen)
        raise MemoryError()
    cdef Py_ssize_t base, t, k
    cdef int odd, count, kind, c
    out = []
    try:
        for k in range(size):
            kk[k] = kinds[k]
            ii[k] = ids[k]
        for base in range(size):
            memset(seen, 0, ncross + 1)
            odd = 0
            count = 0
            for t in range(size):
                k = base + t
                if k >= size:
                    k -= size
                kind = kk[k]
                if kind == BAR:
                    odd ^= 1
                    continue
                c = ii[k]
                if seen[c]:
                    continue
                seen[c] = 1
                if (kind == UNDER) != (odd == 1):
                    count += 1
            out.append(count)
    finally:
        free(kk)
        free(ii)
        free(seen)
    return out


def arc_bar_parities(kinds, ids):
    cdef Py_ssize_t size = len(kinds)
    cdef Py_ssize_t k, p, q
    cdef int total = 0, inner
    cdef int *prefix = <int *> calloc(size + 1, sizeof(int))
    if prefix == NULL:
        raise MemoryError()
    out = [-1] * size
    where = {}
    try:
        for k in range(size):
            prefix[k + 1] = prefix[k] + (kinds[k] == BAR)
        total = prefix[size]
        for k in range(size):
            if kinds[k] != BAR:
                where.setdefault(ids[k], []).append(k)
        for occ in where.values():
            if len(occ) == 1:
                out[occ[0]] = total & 1
            else:
                p = occ[0]
                q = occ[1]
                inner = prefix[q] - prefix[p + 1]
                out[p] = inner & 1
                out[q] = (total - inner) & 1
    finally:
        free(prefix)
    return out
