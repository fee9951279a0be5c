# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of :mod:`ldic._pykernels`.

Works in 64-bit integers; inputs whose magnitude could overflow a triple
product are handed to the pure-Python kernels instead.
"""

from libc.stdlib cimport malloc, free

from ldic import _pykernels

# |entry| <= 2**19 keeps every triple product below 2**62.
cdef long long _LIMIT = 1 << 19


cdef long long _gcd(long long a, long long b) nogil:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef bint _fits(rows):
    for r in rows:
        for v in r:
            if v > _LIMIT or v < -_LIMIT:
                return False
    return True


def polygon_vertices(rows):
    if not _fits(rows):
        return _pykernels.polygon_vertices(rows)
    cdef Py_ssize_t n = len(rows)
    cdef long long *a = <long long *> malloc(3 * n * sizeof(long long))
    if a == NULL:
        raise MemoryError()
    cdef Py_ssize_t i, j, k
    cdef long long det, xn, yn, g
    cdef bint feasible
    seen = set()
    out = []
    try:
        for i in range(n):
            a[3 * i] = rows[i][0]
            a[3 * i + 1] = rows[i][1]
            a[3 * i + 2] = rows[i][2]
        for i in range(n):
            for j in range(i + 1, n):
                det = a[3 * i] * a[3 * j + 1] - a[3 * i + 1] * a[3 * j]
                if det == 0:
                    continue
                xn = a[3 * i + 2] * a[3 * j + 1] - a[3 * i + 1] * a[3 * j + 2]
                yn = a[3 * i] * a[3 * j + 2] - a[3 * i + 2] * a[3 * j]
                if det < 0:
                    xn = -xn
                    yn = -yn
                    det = -det
                feasible = True
                for k in range(n):
                    if a[3 * k] * xn + a[3 * k + 1] * yn > a[3 * k + 2] * det:
                        feasible = False
                        break
                if feasible:
                    g = _gcd(_gcd(xn, yn), det)
                    p = (xn // g, yn // g, det // g)
                    if p not in seen:
                        seen.add(p)
                        out.append(p)
    finally:
        free(a)
    return out


def tight_counts(rows, points):
    if not (_fits(rows) and _fits(points)):
        return _pykernels.tight_counts(rows, points)
    cdef long long a1, a2, b, xn, yn, d
    cdef int c
    counts = []
    for r in rows:
        a1, a2, b = r
        c = 0
        for p in points:
            xn, yn, d = p
            if a1 * xn + a2 * yn == b * d:
                c += 1
        counts.append(c)
    return counts
