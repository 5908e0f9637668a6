# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; contracts mirror ``convexcodes.kernels._python``."""

from libc.stdlib cimport calloc, free, malloc
from libc.string cimport memcpy

NAME = "native"

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


def face_table(int n, facet_masks):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef bytearray out = bytearray(size)
    cdef unsigned char[::1] table = out
    cdef Py_ssize_t mask, bit
    cdef int b
    for f in facet_masks:
        table[f] = 1
    for b in range(n):
        bit = (<Py_ssize_t>1) << b
        for mask in range(size):
            if (mask & bit) and table[mask]:
                table[mask ^ bit] = 1
    return bytes(out)


def minimal_nonfaces(int n, const unsigned char[::1] table):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t s, rest, low
    cdef bint minimal
    out = []
    for s in range(size):
        if table[s]:
            continue
        rest = s
        minimal = True
        while rest:
            low = rest & -rest
            rest ^= low
            if not table[s ^ low]:
                minimal = False
                break
        if minimal:
            out.append(s)
    return out


cdef bint _all_small_subsets_faces(Py_ssize_t s, int size, const unsigned char[::1] table) nogil:
    cdef Py_ssize_t sub = s
    while True:
        if __builtin_popcountll(sub) == size and not table[sub]:
            return False
        if sub == 0:
            return True
        sub = (sub - 1) & s


def helly_violations(int n, const unsigned char[::1] table, int d):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t s
    out = []
    for s in range(size):
        if table[s] or __builtin_popcountll(s) < d + 2:
            continue
        if _all_small_subsets_faces(s, d + 1, table):
            out.append(s)
    return out


def helly_bound(int n, const unsigned char[::1] table):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef Py_ssize_t s
    cdef int d
    cdef bint found
    for d in range(n + 1):
        found = False
        for s in range(size):
            if table[s] or __builtin_popcountll(s) < d + 2:
                continue
            if _all_small_subsets_faces(s, d + 1, table):
                found = True
                break
        if not found:
            return d
    return n


cdef struct _Search:
    int n
    int m
    int nruns
    int *run_lo
    int *run_hi
    unsigned char *cells      # n rows of m cells
    unsigned char *seen       # indicator over support families
    unsigned long long *prefix
    unsigned long long *suffix


cdef void _finish(_Search *S, unsigned char *cells) nogil:
    cdef int m = S.m, c, lo, hi
    cdef unsigned long long mid, last_bit = 1ULL << (S.n - 1)
    S.prefix[0] = 0
    for c in range(m):
        S.prefix[c + 1] = S.prefix[c] | (1ULL << cells[c])
    S.suffix[m] = 0
    for c in range(m - 1, -1, -1):
        S.suffix[c] = S.suffix[c + 1] | (1ULL << cells[c])
    S.seen[S.prefix[m]] = 1
    for lo in range(m):
        mid = 0
        for hi in range(lo, m):
            mid |= 1ULL << (cells[hi] | last_bit)
            S.seen[S.prefix[lo] | mid | S.suffix[hi + 1]] = 1


cdef void _assign(_Search *S, int j) nogil:
    cdef int m = S.m, r, c
    cdef unsigned char *cur = S.cells + j * m
    cdef unsigned char *nxt
    cdef unsigned char bit
    if j == S.n - 1:
        _finish(S, cur)
        return
    nxt = cur + m
    bit = <unsigned char>(1 << j)
    memcpy(nxt, cur, m)
    _assign(S, j + 1)
    for r in range(S.nruns):
        memcpy(nxt, cur, m)
        for c in range(S.run_lo[r], S.run_hi[r] + 1):
            nxt[c] |= bit
        _assign(S, j + 1)


def realizable_1d_masks(int n, int t):
    if n == 0:
        return frozenset({1})
    if n > 4:
        raise ValueError("native 1-D enumeration supports n <= 4")
    cdef int m = 2 * t + 1
    cdef _Search S
    cdef Py_ssize_t families = (<Py_ssize_t>1) << (1 << n)
    cdef Py_ssize_t f
    cdef int lo, hi, r = 0
    S.n = n
    S.m = m
    S.nruns = m * (m + 1) // 2
    S.run_lo = <int *>malloc(S.nruns * sizeof(int))
    S.run_hi = <int *>malloc(S.nruns * sizeof(int))
    S.cells = <unsigned char *>calloc(n * m, 1)
    S.seen = <unsigned char *>calloc(families, 1)
    S.prefix = <unsigned long long *>malloc((m + 1) * sizeof(unsigned long long))
    S.suffix = <unsigned long long *>malloc((m + 1) * sizeof(unsigned long long))
    try:
        if not (S.run_lo and S.run_hi and S.cells and S.seen and S.prefix and S.suffix):
            raise MemoryError()
        for lo in range(m):
            for hi in range(lo, m):
                S.run_lo[r] = lo
                S.run_hi[r] = hi
                r += 1
        with nogil:
            _assign(&S, 0)
        return frozenset([f for f in range(families) if S.seen[f]])
    finally:
        free(S.run_lo)
        free(S.run_hi)
        free(S.cells)
        free(S.seen)
        free(S.prefix)
        free(S.suffix)
