# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled int64 kernels; same contracts as ``_pykernels``.

Callers must check magnitudes first (see ``nck3.kernels``).
"""
from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t


def box_scan(gram, long bound, long long target):
    cdef Py_ssize_t n = len(gram)
    cdef Py_ssize_t i, j, k
    cdef int64_t *g = <int64_t *> malloc(n * n * sizeof(int64_t))
    cdef int64_t *x = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t *gx = <int64_t *> malloc(n * sizeof(int64_t))
    cdef int64_t q, d
    out = []
    try:
        for i in range(n):
            for j in range(n):
                g[i * n + j] = gram[i][j]
        for i in range(n):
            x[i] = -bound
        for i in range(n):
            gx[i] = 0
            for j in range(n):
                gx[i] += g[i * n + j] * x[j]
        q = 0
        for i in range(n):
            q += x[i] * gx[i]
        while True:
            if q == target:
                k = 0
                while k < n and x[k] == 0:
                    k += 1
                if k < n and x[k] > 0:
                    out.append(tuple([x[j] for j in range(n)]))
            # odometer step, last coordinate fastest
            i = n - 1
            while i >= 0 and x[i] == bound:
                d = -2 * bound
                q += 2 * d * gx[i] + d * d * g[i * n + i]
                for j in range(n):
                    gx[j] += d * g[j * n + i]
                x[i] = -bound
                i -= 1
            if i < 0:
                break
            q += 2 * gx[i] + g[i * n + i]
            for j in range(n):
                gx[j] += g[j * n + i]
            x[i] += 1
    finally:
        free(g)
        free(x)
        free(gx)
    return out


def wall_candidates(v, long bound):
    cdef int64_t v0 = v[0], v1 = v[1], v2 = v[2]
    cdef int64_t w0, w1, w2, x0, x1, x2, a, b, c, rad, p, r
    out = []
    for w0 in range(-bound, bound + 1):
        for w1 in range(-bound, bound + 1):
            for w2 in range(-bound, bound + 1):
                if w1 * w1 - 2 * w0 * w2 < 0:
                    continue
                x0 = v0 - w0
                x1 = v1 - w1
                x2 = v2 - w2
                if x1 * x1 - 2 * x0 * x2 < 0:
                    continue
                a = v0 * w1 - w0 * v1
                b = v0 * w2 - w0 * v2
                c = v1 * w2 - w1 * v2
                if a != 0:
                    rad = b * b - 2 * a * c
                    if rad <= 0:
                        continue
                    p = w1 * a - b * w0
                    r = x1 * a - b * x0
                    if (p >= 0 and r >= 0) or (p <= 0 and r <= 0):
                        out.append((w0, w1, w2))
                    elif w0 != 0 and p * p < rad * w0 * w0:
                        out.append((w0, w1, w2))
                    elif x0 != 0 and r * r < rad * x0 * x0:
                        out.append((w0, w1, w2))
                elif b != 0:
                    p = w1 * b - c * w0
                    r = x1 * b - c * x0
                    if (p >= 0 and r >= 0) or (p <= 0 and r <= 0):
                        out.append((w0, w1, w2))
    return out
