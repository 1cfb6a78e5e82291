# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels mirroring ``_pykernels``.

Masks cross the boundary as Python ints and are unpacked into arrays of
64-bit words.  ``enumerate_cells`` is limited to universes of at most 64
elements; the dispatcher in ``__init__`` routes larger inputs to Python.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memset


cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil


cdef void _unpack(object value, uint64_t* out, Py_ssize_t nwords) except *:
    cdef bytes raw = (<object>value).to_bytes(nwords * 8, "little")
    cdef const unsigned char* p = raw
    cdef Py_ssize_t w, b
    cdef uint64_t acc
    for w in range(nwords):
        acc = 0
        for b in range(8):
            acc |= (<uint64_t>p[w * 8 + b]) << (8 * b)
        out[w] = acc


cdef object _pack(const uint64_t* words, Py_ssize_t nwords):
    cdef bytearray raw = bytearray(nwords * 8)
    cdef Py_ssize_t w, b
    for w in range(nwords):
        for b in range(8):
            raw[w * 8 + b] = (words[w] >> (8 * b)) & 0xFF
    return int.from_bytes(raw, "little")


def closure(succ, allowed):
    cdef Py_ssize_t n = len(succ)
    cdef Py_ssize_t nw = (n + 63) // 64 if n else 1
    cdef uint64_t* s = <uint64_t*>malloc(n * nw * sizeof(uint64_t) + 1)
    cdef uint64_t* allow = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef uint64_t* seen = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef uint64_t* frontier = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef uint64_t* nxt = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef Py_ssize_t i, j, w, b
    cdef uint64_t word
    cdef bint active
    reach = [0] * n
    try:
        for i in range(n):
            _unpack(succ[i], s + i * nw, nw)
        _unpack(allowed, allow, nw)
        for i in range(n):
            if not (allow[i >> 6] >> (i & 63)) & 1:
                continue
            memset(seen, 0, nw * sizeof(uint64_t))
            seen[i >> 6] = (<uint64_t>1) << (i & 63)
            for w in range(nw):
                frontier[w] = seen[w]
            active = True
            while active:
                memset(nxt, 0, nw * sizeof(uint64_t))
                for w in range(nw):
                    word = frontier[w]
                    while word:
                        j = w * 64 + __builtin_ctzll(word)
                        word &= word - 1
                        for b in range(nw):
                            nxt[b] |= s[j * nw + b]
                active = False
                for w in range(nw):
                    frontier[w] = nxt[w] & allow[w] & ~seen[w]
                    seen[w] |= frontier[w]
                    if frontier[w]:
                        active = True
            reach[i] = _pack(seen, nw)
    finally:
        free(s)
        free(allow)
        free(seen)
        free(frontier)
        free(nxt)
    return reach


cdef inline uint64_t _union(const uint64_t* masks, uint64_t members) nogil:
    cdef uint64_t out = 0
    while members:
        out |= masks[__builtin_ctzll(members)]
        members &= members - 1
    return out


cdef inline bint _independent(const uint64_t* conflict, uint64_t mask) nogil:
    cdef uint64_t rest = mask
    while rest:
        if conflict[__builtin_ctzll(rest)] & mask:
            return False
        rest &= rest - 1
    return True


def enumerate_cells(minus, plus, conflict):
    cdef Py_ssize_t n = len(minus)
    if n > 64:
        raise ValueError("compiled enumerate_cells handles at most 64 elements")
    cdef uint64_t mn[64]
    cdef uint64_t pl[64]
    cdef uint64_t cf[64]
    cdef Py_ssize_t i
    for i in range(n):
        mn[i] = minus[i]
        pl[i] = plus[i]
        cf[i] = conflict[i]
    # explicit DFS stack; depth <= n + 1, each level pushes at most 2
    cdef Py_ssize_t cap = 2 * (n + 2)
    cdef int* st_i = <int*>malloc(cap * sizeof(int))
    cdef uint64_t* st_c = <uint64_t*>malloc(cap * sizeof(uint64_t))
    cdef uint64_t* st_b = <uint64_t*>malloc(cap * sizeof(uint64_t))
    cdef Py_ssize_t top = 0
    cdef int k
    cdef uint64_t chosen, banned, m, p, m_minus, m_plus, p_minus, p_plus
    out = []
    try:
        st_i[0] = 0
        st_c[0] = 0
        st_b[0] = 0
        top = 1
        while top:
            top -= 1
            k = st_i[top]
            chosen = st_c[top]
            banned = st_b[top]
            if k == n:
                if not chosen:
                    continue
                m = chosen
                m_minus = _union(mn, m)
                m_plus = _union(pl, m)
                p = (m | m_plus) & ~m_minus
                if not p or m != ((p | m_minus) & ~m_plus):
                    continue
                if not _independent(cf, p):
                    continue
                p_minus = _union(mn, p)
                p_plus = _union(pl, p)
                if p != ((m | p_plus) & ~p_minus) or m != ((p | p_minus) & ~p_plus):
                    continue
                out.append((m, p))
                continue
            st_i[top] = k + 1
            st_c[top] = chosen
            st_b[top] = banned
            top += 1
            if not (banned >> k) & 1:
                st_i[top] = k + 1
                st_c[top] = chosen | ((<uint64_t>1) << k)
                st_b[top] = banned | cf[k]
                top += 1
    finally:
        free(st_i)
        free(st_c)
        free(st_b)
    out.sort()
    return out
