"""Mukai lattice of the Kuznetsov component of a cubic fourfold.

The lattice carries a marked ``A2`` spanned by ``lambda1, lambda2``. The
degree-shift autoequivalence and the orientation-reversing isometry act on
``A2`` and trivially on its orthogonal complement; both extend integrally
because they act trivially on the discriminant group ``Z/3`` of ``A2``.
"""
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import gcd

from . import intmat
from .kernels import box_scan
from .lattice import (
    LatticeError,
    LatticeModel,
    LatticeVector,
    catalog,
    direct_sum,
    divisibility,
    is_primitive,
    is_saturated,
    mukai_lattice,
    orthogonal_complement,
    pair,
)

DEFAULT_SEARCH_BOUND = 50
# largest box (in vectors) the isotropic search will scan
SEARCH_BOX_LIMIT = 3 * 10 ** 7


@dataclass(frozen=True)
class KuznetsovLattice:
    full: LatticeModel
    lambda1: LatticeVector
    lambda2: LatticeVector

    def __post_init__(self):
        l1, l2 = self.lambda1, self.lambda2
        if not isinstance(l1, LatticeVector):
            object.__setattr__(self, "lambda1", l1 := self.full.vector(l1))
        if not isinstance(l2, LatticeVector):
            object.__setattr__(self, "lambda2", l2 := self.full.vector(l2))
        L = self.full
        if (pair(L, l1, l1), pair(L, l1, l2), pair(L, l2, l2)) != (2, -1, 2):
            raise LatticeError("lambda1, lambda2 do not span a copy of A2")
        if not is_saturated(L, [l1, l2]):
            raise LatticeError("the marked A2 is not saturated")

    def vector(self, coords):
        return self.full.vector(coords)

    def combo(self, a, b):
        return a * self.lambda1 + b * self.lambda2


def very_general():
    """The very general case: the algebraic lattice is ``A2`` itself."""
    L = catalog("A2")
    return KuznetsovLattice(L, L.vector((1, 0)), L.vector((0, 1)))


def with_summand(extra):
    """``A2 + extra`` with the marked ``A2`` in the first two coordinates."""
    if isinstance(extra, str):
        extra = catalog(extra)
    L = direct_sum(catalog("A2"), extra)
    n = L.rank
    e = [[int(i == j) for j in range(n)] for i in range(2)]
    return KuznetsovLattice(L, L.vector(e[0]), L.vector(e[1]))


# U-block coordinates inside mukai_lattice()
_E1, _F1, _E2, _F2 = 16, 17, 18, 19


@lru_cache(maxsize=None)
def embed_A2_in_mukai():
    """``A2`` inside the rank-24 Mukai lattice: ``lambda1 = e1+f1``, ``lambda2 = -f1+e2+f2``."""
    L = mukai_lattice()
    l1 = [0] * 24
    l1[_E1] = l1[_F1] = 1
    l2 = [0] * 24
    l2[_F1] = -1
    l2[_E2] = l2[_F2] = 1
    return KuznetsovLattice(L, L.vector(l1), L.vector(l2))


# isometries ---------------------------------------------------------------

# images of (lambda1, lambda2) in the (lambda1, lambda2) basis, as columns
DEGREE_SHIFT_A2 = ((0, -1), (1, -1))
ORIENTATION_REVERSAL_A2 = ((-1, 1), (0, 1))


def _a2_part(K, v):
    p = pair(K.full, v, K.lambda1)
    q = pair(K.full, v, K.lambda2)
    return Fraction(2 * p + q, 3), Fraction(p + 2 * q, 3)


def _apply(K, matrix, v):
    if v.ambient.rank != K.full.rank:
        raise LatticeError("vector is not in the Kuznetsov lattice")
    a, b = _a2_part(K, v)
    na = matrix[0][0] * a + matrix[0][1] * b
    nb = matrix[1][0] * a + matrix[1][1] * b
    da, db = na - a, nb - b
    out = []
    for x, l1, l2 in zip(v.coords, K.lambda1.coords, K.lambda2.coords):
        y = x + da * l1 + db * l2
        assert y.denominator == 1, "isometry failed to preserve the integral lattice"
        out.append(int(y))
    return K.full.vector(out)


def degree_shift(K, v):
    """``lambda1 -> lambda2 -> -lambda1-lambda2``, identity on ``A2``-perp."""
    return _apply(K, DEGREE_SHIFT_A2, v)


def orientation_reversal(K, v):
    """``lambda1 -> -lambda1``, ``lambda2 -> lambda1+lambda2``, identity on ``A2``-perp."""
    return _apply(K, ORIENTATION_REVERSAL_A2, v)


def a2_determinant(matrix):
    return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]


# associated K3 --------------------------------------------------------------

YES = "yes"
TWISTED_ONLY = "twisted_only"
NONE_WITHIN_BOUND = "none_within_bound"


@dataclass(frozen=True)
class AssociatedK3:
    verdict: str
    witness: tuple = ()
    divisibility: int = None
    exhaustive: bool = False
    searched_bound: int = None
    reason: str = ""


def _hyperbolic_summand(L):
    g = L.gram
    n = L.rank
    for i in range(n):
        if g[i][i] != 0:
            continue
        for j in range(i + 1, n):
            if g[j][j] != 0 or abs(g[i][j]) != 1:
                continue
            if all(g[i][k] == 0 and g[j][k] == 0 for k in range(n) if k not in (i, j)):
                return i, j
    return None


def hyperbolic_partner(L, w):
    """``u`` with ``u^2 = 0`` and ``(u, w) = 1`` for isotropic ``w`` of divisibility 1."""
    gw = intmat.matvec(L.gram, w.coords)
    # extended gcd over the pairing values
    coeffs = [0] * L.rank
    g = 0
    for i, x in enumerate(gw):
        if x == 0:
            continue
        if g == 0:
            g, coeffs[i] = abs(x), (1 if x > 0 else -1)
            continue
        d, s, t = intmat._xgcd(g, x)
        if d < 0:
            d, s, t = -d, -s, -t
        coeffs = [s * c for c in coeffs]
        coeffs[i] += t
        g = d
    if g != 1:
        raise LatticeError("isotropic vector does not have divisibility 1")
    u = L.vector(coeffs)
    if pair(L, u, w) < 0:
        u = -u
    k = pair(L, u, u) // 2
    return u - k * w


def has_associated_k3(K, bound=DEFAULT_SEARCH_BOUND):
    """Look for a primitive isotropic vector and classify it by divisibility.

    ``yes`` carries a pair of vectors with Gram ``(0 1; 1 0)``;
    ``twisted_only`` the isotropic vector of least divisibility found.
    ``none_within_bound`` is only a proof of nonexistence when
    ``exhaustive`` is set.
    """
    L = K.full if isinstance(K, KuznetsovLattice) else K
    if L.is_positive_definite() or L.is_negative_definite():
        return AssociatedK3(NONE_WITHIN_BOUND, exhaustive=True,
                            reason="definite: exhaustive")
    hyp = _hyperbolic_summand(L)
    if hyp is not None:
        i, j = hyp
        e = L.vector([int(k == i) for k in range(L.rank)])
        f = L.vector([int(k == j) for k in range(L.rank)])
        if pair(L, e, f) < 0:
            f = -f
        return AssociatedK3(YES, (e, f), 1, exhaustive=True, reason="hyperbolic summand")
    eff = bound
    while eff > 0 and (2 * eff + 1) ** L.rank > SEARCH_BOX_LIMIT:
        eff -= 1
    hits = []
    for x in box_scan(L.gram, eff, 0):
        if intmat.vec_gcd(x) != 1:
            continue
        w = L.vector(x)
        hits.append((divisibility(L, w), max(abs(c) for c in x), x, w))
    if not hits:
        return AssociatedK3(NONE_WITHIN_BOUND, searched_bound=eff,
                            reason="no isotropic vector in the searched box")
    hits.sort(key=lambda h: h[:3])
    div, _, _, w = hits[0]
    if div == 1:
        u = hyperbolic_partner(L, w)
        return AssociatedK3(YES, (w, u), 1, searched_bound=eff, reason="isotropic vector of divisibility 1")
    return AssociatedK3(TWISTED_ONLY, (w,), div, searched_bound=eff,
                        reason="isotropic vectors found, none of divisibility 1")


# moduli -----------------------------------------------------------------------

@dataclass(frozen=True)
class ModuliReport:
    nonempty: bool
    dim: int
    deformation_class: str = None


def moduli_info(K, v):
    """Dimension ``v^2 + 2`` of the moduli space of stable objects of class ``v``."""
    L = K.full
    if v.is_zero():
        raise LatticeError("zero Mukai vector")
    if not is_primitive(L, v):
        raise LatticeError("imprimitive Mukai vectors are not supported")
    dim = pair(L, v, v) + 2
    nonempty = dim >= 0
    return ModuliReport(nonempty, dim, f"K3^[{dim // 2}]" if nonempty else None)


@dataclass(frozen=True)
class FamilyInvariants:
    a: int
    b: int
    n: int
    dim: int
    degree: int
    divisibility: int
    lattice_degree: int
    lattice_divisibility: int
    polarization: tuple


def family_degree(n):
    return 6 * n if n % 3 else (2 * n) // 3


def family_invariants(a, b, model=None):
    """Invariants of the 20-dimensional family attached to ``v = a lambda1 + b lambda2``.

    The closed forms are checked against the lattice: the degree is the square
    of the generator of ``v``-perp inside ``A2``, and the divisibility of that
    generator is computed inside ``v``-perp of the rank-24 Mukai lattice.
    """
    if (a, b) == (0, 0) or gcd(a, b) != 1:
        raise LatticeError(f"({a}, {b}) is not a coprime pair")
    n = a * a - a * b + b * b
    A = catalog("A2")
    gen = orthogonal_complement(A, [A.vector((a, b))])
    (h,) = gen.basis
    lattice_degree = gen.induced_gram[0][0]

    K = model or embed_A2_in_mukai()
    v = K.combo(a, b)
    h24 = K.combo(*h.coords)
    perp = orthogonal_complement(K.full, [v])
    lattice_div = intmat.vec_gcd([pair(K.full, h24, x) for x in perp.basis])
    return FamilyInvariants(a, b, n, 2 * n + 2, family_degree(n), 2,
                            lattice_degree, lattice_div, tuple(h.coords))


def second_cohomology_model(K, v):
    """``v``-perp (when ``v^2 > 0``) or the quotient ``v``-perp/``Zv`` (when ``v^2 = 0``).

    The first case returns a :class:`~nck3.lattice.Sublattice`, the second a
    :class:`~nck3.lattice.LatticeModel`.
    """
    L = K.full if isinstance(K, KuznetsovLattice) else K
    if v.is_zero():
        raise LatticeError("zero Mukai vector")
    if not is_primitive(L, v):
        raise LatticeError("imprimitive Mukai vector")
    sq = pair(L, v, v)
    if sq < 0:
        raise LatticeError("v^2 < 0: the moduli space is empty")
    perp = orthogonal_complement(L, [v])
    if sq > 0:
        return perp
    rows = [list(b.coords) for b in perp.basis]
    c = intmat.coordinates_in(rows, v.coords)
    m = intmat.complete_to_basis(c)
    new = intmat.matmul(m, rows)
    assert list(new[0]) == list(v.coords)
    rest = new[1:]
    gram = [[intmat.bilinear(L.gram, x, y) for y in rest] for x in rest]
    return LatticeModel(gram, "v-perp/Zv")
