# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels for cyclotomic coefficient vectors.

Same contract as _cycore_py; coefficients stay Python ints so precision
is unbounded, the win is loop and dispatch overhead.
"""

from math import gcd

BACKEND = "cython"


def conv_reduce(list a, list b, rows, Py_ssize_t deg):
    cdef Py_ssize_t n = 2 * deg - 1
    cdef Py_ssize_t i, j, e
    cdef list c = [0] * n
    cdef object ai, bj, ce, ri
    cdef list out
    cdef tuple row
    for i in range(deg):
        ai = a[i]
        if ai:
            for j in range(deg):
                bj = b[j]
                if bj:
                    c[i + j] = c[i + j] + ai * bj
    out = c[:deg]
    for e in range(deg - 1):
        ce = c[deg + e]
        if ce:
            row = rows[e]
            for i in range(deg):
                ri = row[i]
                if ri:
                    out[i] = out[i] + ce * ri
    return out


def add_scaled(list a, list b, ca, cb):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = ca * a[i] + cb * b[i]
    return out


def scale(list a, c):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = c * a[i]
    return out


def content(list a, extra):
    cdef Py_ssize_t i, n = len(a)
    g = extra
    cdef object x
    for i in range(n):
        x = a[i]
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g
