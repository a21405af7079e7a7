# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled GF(2) kernels: bit-packed rank and colex subset enumeration.

Mirrors ``qextremal._kernels.pure`` for matrices of at most 62 columns
(adjacency matrices of graphs on at most 62 vertices).  The enumeration
loops run without the GIL so callers may thread them.
"""

from math import comb

from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define QEX_CTZ(x) __builtin_ctzll(x)
    #else
    static int QEX_CTZ(unsigned long long x) {
        int i = 0;
        while (!(x & 1ULL)) { x >>= 1; ++i; }
        return i;
    }
    #endif
    """
    int QEX_CTZ(unsigned long long x) nogil


DEF MAXN = 62


cdef inline int _rank(uint64_t *rows, int n_rows) nogil:
    # Pivot per row: first set bit in column order, tracked in `used`.
    cdef uint64_t piv[64]
    cdef uint64_t used = 0, r, low
    cdef int rank = 0, i
    for i in range(n_rows):
        r = rows[i]
        while r:
            low = r & (~r + 1)
            if used & low:
                r ^= piv[QEX_CTZ(low)]
            else:
                piv[QEX_CTZ(low)] = r
                used |= low
                rank += 1
                break
    return rank


cdef inline uint64_t _next_colex(uint64_t mask) nogil:
    cdef uint64_t low = mask & (~mask + 1)
    cdef uint64_t ripple = mask + low
    return (((mask ^ ripple) >> 2) >> QEX_CTZ(low)) | ripple


cdef inline int _cut_rank(uint64_t *adj, uint64_t mask) nogil:
    cdef uint64_t rows[MAXN]
    cdef uint64_t inv = ~mask, m = mask, low
    cdef int n_rows = 0
    while m:
        low = m & (~m + 1)
        rows[n_rows] = adj[QEX_CTZ(low)] & inv
        n_rows += 1
        m ^= low
    return _rank(rows, n_rows)


cdef int _load_adj(object adj_rows, uint64_t *adj) except -1:
    cdef int n = len(adj_rows)
    cdef int i
    if n > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} vertices")
    for i in range(n):
        adj[i] = <uint64_t> adj_rows[i]
    return n


def rank_of_rows(rows, n_cols=None):
    """GF(2) rank of bit-packed rows (each fitting in 62 bits)."""
    cdef uint64_t buf[MAXN]
    cdef int n_rows = len(rows)
    cdef int i
    if n_rows > MAXN:
        raise ValueError(f"compiled kernel supports at most {MAXN} rows")
    for i in range(n_rows):
        buf[i] = <uint64_t> rows[i]
    return _rank(buf, n_rows)


def subset_rank_profile(adj_rows, int n, int k):
    """Cut rank of every k-subset, colex order, as a bytearray."""
    cdef uint64_t adj[MAXN]
    _load_adj(adj_rows, adj)
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    out = bytearray(comb(n, k))
    cdef unsigned char[::1] view = out
    cdef uint64_t mask = (<uint64_t> 1 << k) - 1
    cdef uint64_t top = <uint64_t> 1 << n
    cdef Py_ssize_t idx = 0
    with nogil:
        while mask < top:
            view[idx] = <unsigned char> _cut_rank(adj, mask)
            idx += 1
            mask = _next_colex(mask)
    return out


def count_full_rank_cuts(adj_rows, int n, int k):
    """Number of k-subsets whose cut matrix has full rank k."""
    cdef uint64_t adj[MAXN]
    _load_adj(adj_rows, adj)
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    cdef uint64_t mask = (<uint64_t> 1 << k) - 1
    cdef uint64_t top = <uint64_t> 1 << n
    cdef long count = 0
    with nogil:
        while mask < top:
            if _cut_rank(adj, mask) == k:
                count += 1
            mask = _next_colex(mask)
    return count
