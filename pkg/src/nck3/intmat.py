"""Exact integer and rational matrix routines.

Matrices are plain lists of lists. Integer routines never leave ``int``;
rational routines use :class:`fractions.Fraction`.
"""
from fractions import Fraction
from math import gcd, isqrt


def transpose(m):
    return [list(col) for col in zip(*m)] if m else []


def matmul(a, b):
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(m, v):
    nz = [(j, x) for j, x in enumerate(v) if x]
    return [sum(row[j] * x for j, x in nz) for row in m]


def bilinear(gram, x, y):
    """Return ``x^T gram y``."""
    total = 0
    for xi, row in zip(x, gram):
        if xi:
            total += xi * sum(g * yj for g, yj in zip(row, y) if g)
    return total


def gram_of(gram, vectors):
    """Induced Gram matrix ``(v_i^T gram v_j)`` of a list of vectors."""
    images = [matvec(gram, v) for v in vectors]
    return tuple(tuple(sum(a * b for a, b in zip(v, gw) if a) for gw in images) for v in vectors)


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def sign_normalize(v):
    """Flip ``v`` so that its first nonzero entry is positive."""
    for x in v:
        if x:
            return list(v) if x > 0 else [-y for y in v]
    return list(v)


def det_bareiss(m):
    """Determinant of a square integer matrix (fraction-free elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a - (a // b) * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def echelon_with_transform(rows):
    """Row-reduce an integer matrix by unimodular row operations.

    Returns ``(E, U, rank)`` with ``U * rows == E``, ``U`` unimodular and the
    first ``rank`` rows of ``E`` in echelon form, the rest zero.
    """
    a = [list(r) for r in rows]
    n = len(a)
    ncols = len(a[0]) if a else 0
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    r = 0
    for c in range(ncols):
        if r == n:
            break
        for i in range(r + 1, n):
            if a[i][c] == 0:
                continue
            p, q = a[r][c], a[i][c]
            g, s, t = _xgcd(p, q)
            pg, qg = p // g, q // g
            ar, ai = a[r], a[i]
            a[r] = [s * x + t * y for x, y in zip(ar, ai)]
            a[i] = [-qg * x + pg * y for x, y in zip(ar, ai)]
            ur, ui = u[r], u[i]
            u[r] = [s * x + t * y for x, y in zip(ur, ui)]
            u[i] = [-qg * x + pg * y for x, y in zip(ur, ui)]
        if a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            r += 1
    return a, u, r


def hermite_rows(rows):
    """Row-style Hermite normal form of the row lattice (zero rows dropped)."""
    if not rows:
        return []
    e, _, rank = echelon_with_transform(rows)
    h = [list(row) for row in e[:rank]]
    pivots = []
    for row in h:
        pivots.append(next(j for j, x in enumerate(row) if x))
    for i in range(rank):
        pc = pivots[i]
        p = h[i][pc]
        for k in range(i):
            q = h[k][pc] // p
            if q:
                h[k] = [x - q * y for x, y in zip(h[k], h[i])]
    return h


def integer_kernel(m, ncols=None):
    """Basis of ``{x in Z^n : m x = 0}``; the result is saturated in Z^n."""
    if not m:
        if ncols is None:
            raise ValueError("cannot infer column count of an empty matrix")
        return [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    e, u, rank = echelon_with_transform(transpose(m))
    return hermite_rows(u[rank:])


def saturate(rows, ncols):
    """Saturation ``(span Q rows) ∩ Z^n`` of an integer row lattice."""
    if not rows:
        return []
    return integer_kernel(integer_kernel(rows, ncols), ncols)


def complete_to_basis(v):
    """Unimodular matrix whose first row is the primitive vector ``v``."""
    if vec_gcd(v) != 1:
        raise ValueError("vector is not primitive")
    n = len(v)
    # column operations reducing v to e_1, accumulated as U with v U = e_1
    cols = [[int(i == j) for j in range(n)] for i in range(n)]  # cols[j] = column j of U
    w = list(v)
    for j in range(1, n):
        if w[j] == 0:
            continue
        g, s, t = _xgcd(w[0], w[j])
        a, b = w[0] // g, w[j] // g
        c0, cj = cols[0], cols[j]
        cols[0] = [s * x + t * y for x, y in zip(c0, cj)]
        cols[j] = [-b * x + a * y for x, y in zip(c0, cj)]
        w[0], w[j] = g, 0
    if w[0] == -1:
        cols[0] = [-x for x in cols[0]]
    u = transpose(cols)
    return inverse_unimodular(u)


def inverse_unimodular(u):
    inv = rational_inverse(u)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def rational_solve(a, b):
    """Solve ``a x = b`` exactly for square nonsingular ``a`` (``b`` a vector)."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n] for row in aug]


def rational_inverse(a):
    n = len(a)
    cols = [rational_solve(a, [int(i == j) for i in range(n)]) for j in range(n)]
    return transpose(cols)


def diagonalize(gram):
    """Diagonal of a rational congruence diagonalization of a symmetric matrix."""
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    diag = []
    k = 0
    while k < n:
        if a[k][k] == 0:
            j = next((j for j in range(k + 1, n) if a[j][j] != 0), None)
            if j is not None:
                a[k], a[j] = a[j], a[k]
                for row in a:
                    row[k], row[j] = row[j], row[k]
            else:
                j = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
                if j is None:
                    diag.append(Fraction(0))
                    k += 1
                    continue
                # x_k -> x_k + x_j makes the pivot 2 a_kj
                for i in range(n):
                    a[k][i] += a[j][i]
                for i in range(n):
                    a[i][k] += a[i][j]
        p = a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / p
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
        for i in range(k + 1, n):
            a[k][i] = Fraction(0)
            a[i][k] = Fraction(0)
        diag.append(p)
        k += 1
    return diag


def signature(gram):
    """Return ``(n_plus, n_minus, n_zero)`` of a symmetric rational matrix."""
    d = diagonalize(gram)
    return (sum(1 for x in d if x > 0), sum(1 for x in d if x < 0),
            sum(1 for x in d if x == 0))


def ldl(gram):
    """``q(x) = sum_i d[i] (x_i + sum_{j>i} mu[i][j] x_j)^2`` for positive definite ``gram``.

    Raises ``ValueError`` if a pivot is not positive.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    mu = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        if a[i][i] <= 0:
            raise ValueError("form is not positive definite")
        d[i] = a[i][i]
        for j in range(i + 1, n):
            mu[i][j] = a[i][j] / d[i]
        for j in range(i + 1, n):
            for k in range(i + 1, n):
                a[j][k] -= mu[i][j] * mu[i][k] * d[i]
    return d, mu


def floor_sqrt_frac(x):
    """Largest integer ``t >= 0`` with ``t*t <= x`` for a nonnegative Fraction."""
    return isqrt(x.numerator // x.denominator)


def coordinates_in(rows, v):
    """Integer ``c`` with ``sum c_i rows[i] == v`` for echelon-form ``rows``.

    Raises ``ValueError`` if ``v`` is not in the row lattice.
    """
    c = []
    rem = list(v)
    for row in rows:
        p = next(j for j, x in enumerate(row) if x)
        q, r = divmod(rem[p], row[p])
        if r:
            raise ValueError("vector is not in the lattice")
        c.append(q)
        rem = [x - q * y for x, y in zip(rem, row)]
    if any(rem):
        raise ValueError("vector is not in the lattice")
    return c
