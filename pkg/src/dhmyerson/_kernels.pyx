# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same contracts as ``_pykernels``."""
import numpy as np
cimport numpy as cnp
from libc.stdint cimport uint32_t, int64_t

cnp.import_array()

cdef extern from *:
    int __builtin_ctz(unsigned int) nogil

cdef enum:
    MAXN = 32


cdef inline int _lowbit(uint32_t m) noexcept nogil:
    return __builtin_ctz(m)


cdef inline uint32_t _closure(uint32_t start, uint32_t* adj) noexcept nogil:
    cdef uint32_t reach = start, frontier = start, nxt, m
    while frontier:
        nxt = 0
        m = frontier
        while m:
            nxt |= adj[_lowbit(m)]
            m &= m - 1
        frontier = nxt & ~reach
        reach |= nxt
    return reach


cdef int _components(int n, const uint32_t* tails, const uint32_t* heads,
                     Py_ssize_t ne, uint32_t ground, bint weak,
                     uint32_t* blocks) noexcept nogil:
    cdef uint32_t succ[MAXN]
    cdef uint32_t pred[MAXN]
    cdef uint32_t outside = ~ground, t, h, both, m, remaining, low, block
    cdef Py_ssize_t e
    cdef int i, count = 0
    for i in range(n):
        succ[i] = 0
        pred[i] = 0
    for e in range(ne):
        t = tails[e]
        h = heads[e]
        if (t | h) & outside:
            continue
        if weak:
            both = t | h
            m = both
            while m:
                succ[_lowbit(m)] |= both
                m &= m - 1
        else:
            m = t
            while m:
                succ[_lowbit(m)] |= h
                m &= m - 1
            m = h
            while m:
                pred[_lowbit(m)] |= t
                m &= m - 1
    remaining = ground
    while remaining:
        low = remaining & (~remaining + 1)
        block = _closure(low, succ)
        if not weak:
            block &= _closure(low, pred)
        block &= ground
        blocks[count] = block
        count += 1
        remaining &= ~block
    return count


def _as_u32(seq):
    return np.ascontiguousarray(np.asarray(seq, dtype=np.int64).astype(np.uint32))


def components(int n, tails, heads, ground, bint weak=False):
    cdef uint32_t[::1] t = _as_u32(tails)
    cdef uint32_t[::1] h = _as_u32(heads)
    cdef uint32_t blocks[MAXN]
    cdef int count, k
    if n > 31:
        raise ValueError("compiled kernel supports at most 31 players")
    count = _components(n, &t[0] if t.shape[0] else NULL,
                        &h[0] if h.shape[0] else NULL,
                        t.shape[0], <uint32_t>ground, weak, blocks)
    return [int(blocks[k]) for k in range(count)]


def partition_table(int n, tails, heads, bint weak=False):
    cdef uint32_t[::1] t = _as_u32(tails)
    cdef uint32_t[::1] h = _as_u32(heads)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n
    cdef int width = n if n > 0 else 1
    out_arr = np.zeros((size, width), dtype=np.uint32)
    cdef uint32_t[:, ::1] out = out_arr
    cdef uint32_t blocks[MAXN]
    cdef Py_ssize_t mask
    cdef int count, k
    cdef const uint32_t* tp = &t[0] if t.shape[0] else NULL
    cdef const uint32_t* hp = &h[0] if h.shape[0] else NULL
    cdef Py_ssize_t ne = t.shape[0]
    if n > 31:
        raise ValueError("compiled kernel supports at most 31 players")
    with nogil:
        for mask in range(1, size):
            count = _components(n, tp, hp, ne, <uint32_t>mask, weak, blocks)
            for k in range(count):
                out[mask, k] = blocks[k]
    return out_arr


def restricted_values(int n, tails, heads, bint weak, base, masks):
    cdef uint32_t[::1] t = _as_u32(tails)
    cdef uint32_t[::1] h = _as_u32(heads)
    cdef double[::1] b = np.ascontiguousarray(base, dtype=np.float64)
    cdef cnp.int64_t[::1] ms = np.ascontiguousarray(masks, dtype=np.int64)
    cdef Py_ssize_t count_masks = ms.shape[0], k
    out_arr = np.empty(count_masks, dtype=np.float64)
    cdef double[::1] out = out_arr
    cdef uint32_t blocks[MAXN]
    cdef int count, j
    cdef double total
    cdef const uint32_t* tp = &t[0] if t.shape[0] else NULL
    cdef const uint32_t* hp = &h[0] if h.shape[0] else NULL
    cdef Py_ssize_t ne = t.shape[0]
    if n > 31:
        raise ValueError("compiled kernel supports at most 31 players")
    with nogil:
        for k in range(count_masks):
            count = _components(n, tp, hp, ne, <uint32_t>ms[k], weak, blocks)
            total = 0.0
            for j in range(count):
                total += b[blocks[j]]
            out[k] = total
    return out_arr


def size_marginal_sums(table, int n):
    """int64 tables only; the dispatcher guards against overflow."""
    cdef cnp.int64_t[::1] w = np.ascontiguousarray(table, dtype=np.int64)
    cdef int width = n if n > 0 else 1
    out_arr = np.zeros((n, width), dtype=np.int64)
    cdef cnp.int64_t[:, ::1] out = out_arr
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n, mask, bit
    cdef int i, s
    cdef uint32_t m
    with nogil:
        for i in range(n):
            bit = (<Py_ssize_t>1) << i
            for mask in range(size):
                if mask & bit:
                    continue
                m = <uint32_t>mask
                s = 0
                while m:
                    m &= m - 1
                    s += 1
                out[i, s] += w[mask | bit] - w[mask]
    return out_arr
