"""Even integer lattices given by a Gram matrix.

Everything is exact: coordinates and Gram entries are Python ints, and the
few places that need division (definiteness tests, ellipsoid bounds) use
``Fraction``.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
import re

from . import intmat
from .kernels import box_scan


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class LatticeModel:
    gram: tuple
    label: str = None

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        for row in g:
            if len(row) != n:
                raise LatticeError("Gram matrix must be square")
        for i in range(n):
            if g[i][i] % 2:
                raise LatticeError(f"diagonal entry {i} is odd; only even lattices are supported")
            for j in range(i):
                if g[i][j] != g[j][i]:
                    raise LatticeError("Gram matrix must be symmetric")

    @property
    def rank(self):
        return len(self.gram)

    def vector(self, coords):
        return LatticeVector(tuple(coords), self)

    def basis(self):
        return [self.vector([int(i == j) for j in range(self.rank)]) for i in range(self.rank)]

    def det(self):
        return intmat.det_bareiss(self.gram)

    def signature(self):
        p, m, z = intmat.signature(self.gram)
        return (p, m) if z == 0 else (p, m, z)

    def is_positive_definite(self):
        return all(x > 0 for x in intmat.diagonalize(self.gram))

    def is_negative_definite(self):
        return all(x < 0 for x in intmat.diagonalize(self.gram))

    def __repr__(self):
        name = f" {self.label!r}" if self.label else ""
        return f"<LatticeModel{name} rank={self.rank}>"


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple
    ambient: LatticeModel = field(repr=False, compare=False)

    def __post_init__(self):
        c = tuple(int(x) for x in self.coords)
        object.__setattr__(self, "coords", c)
        if len(c) != self.ambient.rank:
            raise LatticeError(f"vector of length {len(c)} in a rank {self.ambient.rank} lattice")

    def _check(self, other):
        if self.ambient.gram != other.ambient.gram:
            raise LatticeError("vectors live in different lattices")

    def __add__(self, other):
        self._check(other)
        return LatticeVector(tuple(a + b for a, b in zip(self.coords, other.coords)), self.ambient)

    def __sub__(self, other):
        self._check(other)
        return LatticeVector(tuple(a - b for a, b in zip(self.coords, other.coords)), self.ambient)

    def __neg__(self):
        return LatticeVector(tuple(-a for a in self.coords), self.ambient)

    def __mul__(self, k):
        return LatticeVector(tuple(k * a for a in self.coords), self.ambient)

    __rmul__ = __mul__

    def is_zero(self):
        return not any(self.coords)

    def square(self):
        return pair(self.ambient, self, self)


@dataclass(frozen=True)
class Sublattice:
    ambient: LatticeModel
    basis: tuple
    induced_gram: tuple

    @property
    def rank(self):
        return len(self.basis)

    def lattice(self, label=None):
        return LatticeModel(self.induced_gram, label)


def _coords(L, x):
    if isinstance(x, LatticeVector):
        if x.ambient.rank != L.rank:
            raise LatticeError("dimension mismatch between vector and lattice")
        return x.coords
    x = tuple(x)
    if len(x) != L.rank:
        raise LatticeError(f"vector of length {len(x)} in a rank {L.rank} lattice")
    return x


def pair(L, x, y):
    """The bilinear form ``x^T G y``."""
    return intmat.bilinear(L.gram, _coords(L, x), _coords(L, y))


def direct_sum(L1, L2, label=None):
    n1, n2 = L1.rank, L2.rank
    g = [list(row) + [0] * n2 for row in L1.gram]
    g += [[0] * n1 + list(row) for row in L2.gram]
    if label is None and L1.label and L2.label:
        label = f"{L1.label}+{L2.label}"
    return LatticeModel(g, label)


def orthogonal_sum(*lattices, label=None):
    out = reduce(direct_sum, lattices)
    return LatticeModel(out.gram, label or out.label)


def twist(L, k, label=None):
    """The scaled lattice ``L(k)`` with Gram ``k*G``."""
    return LatticeModel([[k * x for x in row] for row in L.gram], label)


def make_sublattice(L, vectors):
    """Sublattice spanned by ``vectors``; they must form a basis of a saturated subgroup."""
    rows = [list(_coords(L, v)) for v in vectors]
    if rows and intmat.hermite_rows(rows) != intmat.saturate(rows, L.rank):
        raise LatticeError("vectors do not span a saturated subgroup")
    if rows and len(intmat.hermite_rows(rows)) != len(rows):
        raise LatticeError("vectors are linearly dependent")
    basis = tuple(L.vector(r) for r in rows)
    return Sublattice(L, basis, intmat.gram_of(L.gram, rows))


def is_saturated(L, vectors):
    rows = [list(_coords(L, v)) for v in vectors]
    return intmat.hermite_rows(rows) == intmat.saturate(rows, L.rank)


def orthogonal_complement(L, vs):
    """Saturated sublattice of vectors orthogonal to every vector in ``vs``."""
    if not vs:
        raise LatticeError("need at least one vector")
    rows = [intmat.matvec(L.gram, _coords(L, v)) for v in vs]
    ker = intmat.integer_kernel(rows, L.rank)
    if len(ker) == 1:
        ker = [intmat.sign_normalize(ker[0])]
    basis = tuple(L.vector(r) for r in ker)
    return Sublattice(L, basis, intmat.gram_of(L.gram, ker))


def divisibility(L, v):
    """Positive generator of ``pair(v, L)``."""
    c = _coords(L, v)
    if not any(c):
        raise LatticeError("divisibility of the zero vector is undefined")
    g = intmat.vec_gcd(intmat.matvec(L.gram, c))
    if g == 0:
        raise LatticeError("vector lies in the radical of the form")
    return g


def is_primitive(L, v):
    c = _coords(L, v)
    if not any(c):
        raise LatticeError("primitivity of the zero vector is undefined")
    return intmat.vec_gcd(c) == 1


def discriminant_group_order(L):
    d = L.det()
    if d == 0:
        raise LatticeError("degenerate Gram matrix")
    return abs(d)


def _ellipsoid_points(d, mu, m):
    """All ``x`` with ``sum d_i (x_i + sum_{j>i} mu_ij x_j)^2 == m`` (Fincke-Pohst)."""
    n = len(d)
    out = []
    x = [0] * n

    def level(i, budget):
        c = -sum((mu[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        s = budget / d[i]
        r = intmat.floor_sqrt_frac(s)
        lo = (c - r - 1).__floor__()
        hi = (c + r + 1).__ceil__()
        for t in range(lo, hi + 1):
            rest = budget - d[i] * (t - c) ** 2
            if rest < 0:
                continue
            x[i] = t
            if i == 0:
                if rest == 0:
                    out.append(tuple(x))
            else:
                level(i - 1, rest)
        x[i] = 0

    if n:
        level(n - 1, Fraction(m))
    return out


def short_vectors(L, norm):
    """Every ``v`` with ``pair(v, v) == norm`` in a negative definite lattice.

    Both ``v`` and ``-v`` are listed; ordering is lexicographic on the
    sign-normalized coordinates with the normalized one first.
    """
    if norm >= 0:
        raise LatticeError("norm must be negative")
    neg = [[-x for x in row] for row in L.gram]
    try:
        d, mu = intmat.ldl(neg)
    except ValueError:
        raise LatticeError("lattice is not negative definite; enumeration would be unbounded") from None
    pts = _ellipsoid_points(d, mu, -norm)
    pts.sort(key=lambda p: (intmat.sign_normalize(p), list(p) != intmat.sign_normalize(p)))
    return [L.vector(p) for p in pts]


def short_vectors_box(L, norm, bound):
    """Brute-force scan of the coordinate box; both signs included."""
    half = box_scan(L.gram, bound, norm)
    out = []
    for p in half:
        out.append(p)
        out.append(tuple(-x for x in p))
    return [L.vector(p) for p in out]


# catalog --------------------------------------------------------------------

_E8_EDGES = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]


def _e8():
    g = [[2 * (i == j) for j in range(8)] for i in range(8)]
    for i, j in _E8_EDGES:
        g[i][j] = g[j][i] = -1
    return g


def U(n=1):
    return LatticeModel([[0, n], [n, 0]], "U" if n == 1 else f"U({n})")


def A2():
    return LatticeModel([[2, -1], [-1, 2]], "A2")


def E8neg():
    return LatticeModel([[-x for x in row] for row in _e8()], "E8(-1)")


def rank_one(k):
    return LatticeModel([[k]], f"<{k}>")


def mukai_lattice():
    """``E8(-1)^2 + U^4``; basis: two E8(-1) blocks (0-15), then e_i, f_i of each U (16-23)."""
    return orthogonal_sum(E8neg(), E8neg(), U(), U(), U(), U(), label="mukai")


def k3_lattice():
    return orthogonal_sum(E8neg(), E8neg(), U(), U(), U(), label="K3")


_SIMPLE = {
    "U": U,
    "A2": A2,
    "A2neg": lambda: LatticeModel([[-2, 1], [1, -2]], "A2neg"),
    "E8": lambda: LatticeModel(_e8(), "E8"),
    "E8neg": E8neg,
    "E8(-1)": E8neg,
    "mukai": mukai_lattice,
    "K3": k3_lattice,
}

CATALOG_NAMES = sorted(_SIMPLE) + ["U(n)", "<k>", "X+Y (direct sums)"]


def catalog(name):
    """Named lattice.

    Recognized: ``U``, ``U(n)``, ``A2``, ``A2neg`` (= A2(-1)), ``E8``,
    ``E8neg``/``E8(-1)``, ``<k>`` (rank one, k even), ``mukai``, ``K3``, and
    ``+``-joined direct sums of these such as ``A2+<-6>``.
    """
    name = name.strip()
    parts = [p for p in re.split(r"\+(?![^<(]*[>)])", name)]
    if len(parts) > 1:
        return orthogonal_sum(*(catalog(p) for p in parts), label=name)
    if name in _SIMPLE:
        return _SIMPLE[name]()
    m = re.fullmatch(r"U\((-?\d+)\)", name)
    if m:
        return U(int(m.group(1)))
    m = re.fullmatch(r"<\s*(-?\d+)\s*>", name)
    if m:
        return rank_one(int(m.group(1)))
    raise LatticeError(f"unknown lattice name {name!r}")
