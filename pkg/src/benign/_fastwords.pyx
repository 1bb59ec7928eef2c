# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word kernels; see benign._purewords for the reference semantics."""

from libc.stdlib cimport free, malloc


cdef inline tuple _take(long long* buf, Py_ssize_t top):
    cdef Py_ssize_t i
    out = [0] * top
    for i in range(top):
        out[i] = buf[i]
    return tuple(out)


def free_reduce(letters):
    cdef Py_ssize_t n = len(letters)
    if n == 0:
        return ()
    cdef long long* buf = <long long*> malloc(n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef long long x
    try:
        for v in letters:
            x = v
            if top > 0 and buf[top - 1] == -x:
                top -= 1
            else:
                buf[top] = x
                top += 1
        return _take(buf, top)
    finally:
        free(buf)


def invert(letters):
    cdef Py_ssize_t n = len(letters)
    cdef Py_ssize_t i
    out = [0] * n
    cdef long long x
    for i, v in enumerate(reversed(letters)):
        x = v
        out[i] = -x
    return tuple(out)


def concat_reduce(*parts):
    return concat_reduce_many(parts)


def concat_reduce_many(parts):
    cdef Py_ssize_t n = 0
    for part in parts:
        n += len(part)
    if n == 0:
        return ()
    cdef long long* buf = <long long*> malloc(n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t top = 0
    cdef long long x
    try:
        for part in parts:
            for v in part:
                x = v
                if top > 0 and buf[top - 1] == -x:
                    top -= 1
                else:
                    buf[top] = x
                    top += 1
        return _take(buf, top)
    finally:
        free(buf)


def conjugate(letters, by):
    return concat_reduce_many((invert(by), letters, by))


def power(letters, n):
    cdef long long k = n
    if k == 0:
        return ()
    if k < 0:
        letters = invert(letters)
        k = -k
    return concat_reduce_many([letters] * <Py_ssize_t> k)
