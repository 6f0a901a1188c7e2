# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
# distutils: language = c++
"""Compiled all-pairs conflict-parity scan for the quadratic baseline.

Each string is a packed key (5 bytes per entry: uint32 LE index, letter
code). Pairs are tested by merging the two sorted supports.
"""

from libc.stdint cimport uint8_t, uint32_t, uint64_t
from libcpp.vector cimport vector

cdef enum:
    ENTRY_BYTES = 5


cdef struct Corpus:
    vector[uint32_t] idx
    vector[uint8_t] code
    vector[Py_ssize_t] start


cdef void _load(list keys, Corpus* c) except *:
    cdef bytes key
    cdef const uint8_t* p
    cdef Py_ssize_t n, t
    c.start.push_back(0)
    for key in keys:
        p = <const uint8_t*><const char*>key
        n = len(key) // ENTRY_BYTES
        for t in range(n):
            c.idx.push_back(
                <uint32_t>p[5 * t]
                | (<uint32_t>p[5 * t + 1] << 8)
                | (<uint32_t>p[5 * t + 2] << 16)
                | (<uint32_t>p[5 * t + 3] << 24)
            )
            c.code.push_back(p[5 * t + 4])
        c.start.push_back(c.idx.size())


cdef inline bint _anti(Corpus* c, Py_ssize_t i, Py_ssize_t j) noexcept nogil:
    cdef Py_ssize_t a = c.start[i], ae = c.start[i + 1]
    cdef Py_ssize_t b = c.start[j], be = c.start[j + 1]
    cdef int parity = 0
    cdef uint32_t ja, jb
    while a < ae and b < be:
        ja = c.idx[a]
        jb = c.idx[b]
        if ja < jb:
            a += 1
        elif jb < ja:
            b += 1
        else:
            parity ^= c.code[a] != c.code[b]
            a += 1
            b += 1
    return parity


def scan_count(list keys):
    """Return ``(anticommuting pairs, pair tests)`` over all unordered pairs."""
    cdef Corpus c
    _load(keys, &c)
    cdef Py_ssize_t m = len(keys), i, j
    cdef uint64_t count = 0, tests = 0
    with nogil:
        for i in range(m):
            for j in range(i + 1, m):
                count += _anti(&c, i, j)
            tests += m - i - 1
    return count, tests


def scan_witness(list keys):
    """First anticommuting pair in lexicographic order, or ``None``."""
    cdef Corpus c
    _load(keys, &c)
    cdef Py_ssize_t m = len(keys), i, j
    for i in range(m):
        for j in range(i + 1, m):
            if _anti(&c, i, j):
                return (i, j)
    return None


def scan_edges(list keys):
    cdef Corpus c
    _load(keys, &c)
    cdef Py_ssize_t m = len(keys), i, j
    out = []
    for i in range(m):
        for j in range(i + 1, m):
            if _anti(&c, i, j):
                out.append((i, j))
    return out
