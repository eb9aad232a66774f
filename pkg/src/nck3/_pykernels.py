"""Pure-Python reference versions of the compiled kernels in ``_kernels.pyx``."""
from itertools import product


def box_scan(gram, bound, target):
    """Nonzero ``x`` in ``[-bound, bound]^n`` with ``x^T gram x == target``.

    Only vectors whose first nonzero entry is positive are returned.
    """
    n = len(gram)
    out = []
    rng = range(-bound, bound + 1)
    for x in product(rng, repeat=n):
        lead = next((c for c in x if c), 0)
        if lead <= 0:
            continue
        q = 0
        for i in range(n):
            xi = x[i]
            if xi:
                row = gram[i]
                q += xi * sum(row[j] * x[j] for j in range(n))
        if q == target:
            out.append(x)
    return out


def wall_candidates(v, bound):
    """Integer triples ``w`` in the box giving a numerical wall for ``v``.

    See :func:`nck3.tilt.enumerate_walls` for the filter; everything here is
    scaled to integers.
    """
    v0, v1, v2 = v
    out = []
    rng = range(-bound, bound + 1)
    for w0, w1, w2 in product(rng, repeat=3):
        if w1 * w1 - 2 * w0 * w2 < 0:
            continue
        x0, x1, x2 = v0 - w0, v1 - w1, v2 - w2
        if x1 * x1 - 2 * x0 * x2 < 0:
            continue
        a = v0 * w1 - w0 * v1
        b = v0 * w2 - w0 * v2
        c = v1 * w2 - w1 * v2
        if a != 0:
            rad = b * b - 2 * a * c
            if rad <= 0:
                continue
            if (w1 * a - b * w0) * (x1 * a - b * x0) >= 0:
                out.append((w0, w1, w2))
                continue
            if w0 != 0 and (w1 * a - b * w0) ** 2 < rad * w0 * w0:
                out.append((w0, w1, w2))
                continue
            if x0 != 0 and (x1 * a - b * x0) ** 2 < rad * x0 * x0:
                out.append((w0, w1, w2))
        elif b != 0:
            if (w1 * b - c * w0) * (x1 * b - c * x0) >= 0:
                out.append((w0, w1, w2))
    return out
