# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the matching kernels in ``_kernels_py``."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline bint _chain(const long[:] word, Py_ssize_t n, long length) noexcept nogil:
    cdef long want = 0
    cdef Py_ssize_t i
    if length <= 0:
        return True
    for i in range(n):
        if word[i] == want:
            want += 1
            if want == length:
                return True
    return False


def chain_contains(word, long length):
    cdef long[:] buf = np.ascontiguousarray(word, dtype=np.int_)
    return bool(_chain(buf, buf.shape[0], length))


def chain_contains_batch(words, long length):
    cdef long[:, ::1] arr = np.ascontiguousarray(words, dtype=np.int_)
    cdef Py_ssize_t n = arr.shape[0], m = arr.shape[1], i
    out = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] res = out
    with nogil:
        for i in range(n):
            res[i] = _chain(arr[i], m, length)
    return out.astype(bool)


def chain_match_positions(word, long length):
    cdef long[:] buf = np.ascontiguousarray(word, dtype=np.int_)
    cdef long want = 0
    cdef Py_ssize_t i
    hits = []
    if length <= 0:
        return hits
    for i in range(buf.shape[0]):
        if buf[i] == want:
            hits.append(i)
            want += 1
            if want == length:
                return hits
    return None
