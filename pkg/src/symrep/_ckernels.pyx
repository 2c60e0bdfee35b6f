# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels mirroring ``_pykernels`` on 64-bit integers.

Callers must keep bead masks within 63 bits and character values within
int64; ``symrep.kernels`` enforces both before dispatching here.
"""
from libc.stdint cimport int64_t, uint64_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long)
    int ctz64 "__builtin_ctzll"(unsigned long long)


cpdef uint64_t bead_mask(parts, int beads):
    cdef uint64_t mask = 0
    cdef int i, p
    cdef int nparts = len(parts)
    for i in range(beads):
        p = parts[i] if i < nparts else 0
        mask |= (<uint64_t>1) << (p - i - 1 + beads)
    return mask


cdef int64_t _mn(uint64_t mask, int j, int* rho, int nrho, uint64_t target, dict memo) except? -1:
    if j == nrho:
        return 1 if mask == target else 0
    key = (<object>mask) * 64 + j
    hit = memo.get(key)
    if hit is not None:
        return hit
    cdef int k = rho[j]
    cdef uint64_t cand = mask & ~(mask << k) & ~(((<uint64_t>1) << k) - 1)
    cdef uint64_t low, between
    cdef int p
    cdef int64_t total = 0, value
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        p = ctz64(low)
        between = mask & (low - 1) & ~(((<uint64_t>1) << (p - k + 1)) - 1)
        value = _mn(mask ^ low ^ (low >> k), j + 1, rho, nrho, target, memo)
        if popcount64(between) & 1:
            total -= value
        else:
            total += value
    memo[key] = total
    return total


cdef int* _int_array(seq):
    cdef int n = len(seq)
    cdef int* out = <int*>malloc((n if n else 1) * sizeof(int))
    cdef int i
    for i in range(n):
        out[i] = seq[i]
    return out


def skew_character(outer, inner, rho):
    cdef int beads = len(outer)
    cdef int* r = _int_array(rho)
    try:
        return _mn(bead_mask(outer, beads), 0, r, len(rho), bead_mask(inner, beads), {})
    finally:
        free(r)


def character_table(int n, shapes, classes):
    cdef uint64_t empty = bead_mask((), n)
    cdef int* r
    cdef int c, row
    table = [[0] * len(classes) for _ in shapes]
    masks = [bead_mask(lam, n) for lam in shapes]
    for c in range(len(classes)):
        r = _int_array(classes[c])
        memo = {}
        try:
            for row in range(len(shapes)):
                table[row][c] = _mn(masks[row], 0, r, len(classes[c]), empty, memo)
        finally:
            free(r)
    return table


cdef int64_t _rank(int* p, int n):
    """Lexicographic rank via the Lehmer code."""
    cdef int64_t rank = 0
    cdef int i, j, smaller
    for i in range(n):
        smaller = 0
        for j in range(i + 1, n):
            if p[j] < p[i]:
                smaller += 1
        rank = rank * (n - i) + smaller
    return rank


def mult_table(int n):
    from itertools import permutations
    import numpy as np

    perms = list(permutations(range(n)))
    cdef Py_ssize_t size = len(perms)
    flat = np.array(perms, dtype=np.int32).reshape(size, n)
    table = np.empty((size, size), dtype=np.int32)
    cdef int[:, ::1] pv = flat
    cdef int[:, ::1] tv = table
    cdef int* buf = <int*>malloc((n if n else 1) * sizeof(int))
    cdef Py_ssize_t i, j
    cdef int x
    try:
        for i in range(size):
            for j in range(size):
                for x in range(n):
                    buf[x] = pv[i, pv[j, x]]
                tv[i, j] = <int>_rank(buf, n)
    finally:
        free(buf)
    return perms, table


def convolve(a, b, table):
    import numpy as np

    cdef int64_t[::1] av = np.ascontiguousarray(a, dtype=np.int64)
    cdef int64_t[::1] bv = np.ascontiguousarray(b, dtype=np.int64)
    cdef int[:, ::1] tv = np.ascontiguousarray(table, dtype=np.int32)
    out = np.zeros(av.shape[0], dtype=np.int64)
    cdef int64_t[::1] cv = out
    cdef Py_ssize_t i, j, size = av.shape[0]
    cdef int64_t x
    for i in range(size):
        x = av[i]
        if x == 0:
            continue
        for j in range(size):
            if bv[j] != 0:
                cv[tv[i, j]] += x * bv[j]
    return [int(v) for v in out]
