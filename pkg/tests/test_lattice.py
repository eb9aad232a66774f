from itertools import product

import pytest
import sympy
from hypothesis import assume, given, strategies as st

from nck3 import intmat
from nck3.lattice import (
    LatticeError,
    LatticeModel,
    catalog,
    direct_sum,
    discriminant_group_order,
    divisibility,
    is_primitive,
    is_saturated,
    mukai_lattice,
    orthogonal_complement,
    pair,
    short_vectors,
    short_vectors_box,
)

from oracles import box_vectors, e8_roots_standard, qf, sympy_det, sympy_signature

A2 = catalog("A2")


# pair -------------------------------------------------------------------------

def test_pair_examples():
    assert pair(A2, (1, 0), (0, 1)) == -1
    assert pair(catalog("U"), (1, 0), (0, 1)) == 1
    assert pair(A2, (1, 2), (1, 2)) == 6


def test_pair_dimension_mismatch():
    with pytest.raises(LatticeError):
        pair(A2, (1, 0, 0), (1, 0))


def even_grams(n, lo=-10, hi=10):
    diag = st.lists(st.integers(lo // 2, hi // 2).map(lambda k: 2 * k), min_size=n, max_size=n)
    off = st.lists(st.integers(lo, hi), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2)

    def build(d, o):
        g = [[0] * n for _ in range(n)]
        it = iter(o)
        for i in range(n):
            g[i][i] = d[i]
            for j in range(i + 1, n):
                g[i][j] = g[j][i] = next(it)
        return g
    return st.builds(build, diag, off)


any_gram = st.integers(1, 4).flatmap(even_grams)


@given(any_gram, st.data())
def test_pair_symmetric_bilinear(g, data):
    n = len(g)
    vec = st.lists(st.integers(-20, 20), min_size=n, max_size=n)
    L = LatticeModel(g)
    x, y, z = data.draw(vec), data.draw(vec), data.draw(vec)
    k = data.draw(st.integers(-5, 5))
    assert pair(L, x, y) == pair(L, y, x) == qf(g, x, y)
    xy = [a + b for a, b in zip(x, y)]
    assert pair(L, xy, z) == pair(L, x, z) + pair(L, y, z)
    assert pair(L, [k * a for a in x], z) == k * pair(L, x, z)


# direct sums and the catalog ------------------------------------------------------

def test_direct_sum_examples():
    L = direct_sum(catalog("U"), A2)
    assert L.rank == 4 and L.det() == -3
    assert direct_sum(catalog("<2>"), catalog("<-2>")).det() == -4


def test_mukai_lattice_shape():
    L = mukai_lattice()
    assert L.rank == 24
    assert abs(sympy_det(L.gram)) == 1
    assert all(L.gram[i][i] % 2 == 0 for i in range(24))
    assert L.signature() == (4, 20) == sympy_signature(L.gram)
    assert discriminant_group_order(L) == 1


def test_catalog_grams():
    assert A2.gram == ((2, -1), (-1, 2))
    assert catalog("U").gram == ((0, 1), (1, 0))
    assert catalog("U(3)").gram == ((0, 3), (3, 0))
    assert catalog("A2neg").gram == ((-2, 1), (1, -2))
    assert catalog("A2+<-6>").gram == ((2, -1, 0), (-1, 2, 0), (0, 0, -6))
    assert catalog("K3").signature() == (3, 19)
    with pytest.raises(LatticeError):
        catalog("D4")


def test_e8_is_the_e8_lattice():
    E = catalog("E8neg")
    assert E.det() == 1 and E.is_negative_definite()
    assert sympy_signature(E.gram) == (0, 8)


def test_rejects_odd_or_asymmetric():
    with pytest.raises(LatticeError):
        LatticeModel([[1, 0], [0, 2]])
    with pytest.raises(LatticeError):
        LatticeModel([[2, 1], [0, 2]])


@given(st.integers(1, 3).flatmap(even_grams), st.integers(1, 3).flatmap(even_grams))
def test_discriminant_order_multiplicative(g1, g2):
    L1, L2 = LatticeModel(g1), LatticeModel(g2)
    assume(L1.det() != 0 and L2.det() != 0)
    assert discriminant_group_order(direct_sum(L1, L2)) == \
        discriminant_group_order(L1) * discriminant_group_order(L2)
    assert discriminant_group_order(L1) == abs(sympy_det(g1))


def test_discriminant_order_examples():
    assert discriminant_group_order(A2) == 3
    assert discriminant_group_order(catalog("U")) == 1
    with pytest.raises(LatticeError):
        discriminant_group_order(LatticeModel([[0, 0], [0, 2]]))


# complements ------------------------------------------------------------------

def test_complement_examples():
    c = orthogonal_complement(A2, [A2.vector((1, 0))])
    assert c.rank == 1 and c.basis[0].coords == (1, 2) and c.induced_gram == ((6,),)
    U = catalog("U")
    c = orthogonal_complement(U, [U.vector((1, 0))])
    assert c.basis[0].coords == (1, 0) and c.induced_gram == ((0,),)
    c = orthogonal_complement(A2, [A2.vector((2, 1))])
    assert c.basis[0].coords == (0, 1) and c.induced_gram == ((2,),)


def test_complement_brute_force_a2():
    # generator found by scanning: the shortest nonzero solution of (c, d) . G (a, b) = 0
    for a, b in product(range(-4, 5), repeat=2):
        if (a, b) == (0, 0):
            continue
        g = orthogonal_complement(A2, [A2.vector((a, b))]).basis[0].coords
        sols = [x for x in product(range(-15, 16), repeat=2) if any(x) and qf(A2.gram, x, (a, b)) == 0]
        prim = min(sols, key=lambda x: (abs(x[0]) + abs(x[1]), x[0] < 0 or (x[0] == 0 and x[1] < 0)))
        assert g == prim


@given(st.integers(2, 5).flatmap(even_grams), st.data())
def test_complement_orthogonal_and_saturated(g, data):
    n = len(g)
    L = LatticeModel(g)
    k = data.draw(st.integers(1, n - 1))
    vs = [data.draw(st.lists(st.integers(-5, 5), min_size=n, max_size=n)) for _ in range(k)]
    assume(any(any(v) for v in vs))
    c = orthogonal_complement(L, vs)
    for b in c.basis:
        for v in vs:
            assert pair(L, b, v) == 0
    if c.rank:
        assert is_saturated(L, c.basis)
        rows = [list(b.coords) for b in c.basis]
        assert intmat.hermite_rows(intmat.saturate(rows, n)) == intmat.hermite_rows(rows)
    gv = sympy.Matrix([qf(g, v, [int(i == j) for j in range(n)]) for v in vs for i in range(n)]).reshape(k, n)
    assert c.rank == n - gv.rank()


# divisibility, primitivity ---------------------------------------------------------

def test_divisibility_examples():
    assert divisibility(A2, (1, 0)) == 1
    assert divisibility(catalog("U(3)"), (1, 0)) == 3
    assert divisibility(catalog("A2+<-6>"), (1, 2, 1)) == 3
    with pytest.raises(LatticeError):
        divisibility(A2, (0, 0))


@given(st.integers(1, 4).flatmap(even_grams), st.data())
def test_divisibility_divides_norm(g, data):
    L = LatticeModel(g)
    v = data.draw(st.lists(st.integers(-9, 9), min_size=len(g), max_size=len(g)))
    assume(any(v) and any(intmat.matvec(g, v)))
    assert pair(L, v, v) % divisibility(L, v) == 0


def test_primitive_examples():
    assert not is_primitive(A2, (2, 0))
    assert is_primitive(A2, (1, 2))
    v = [0] * 24
    v[16] = v[17] = 3
    assert not is_primitive(mukai_lattice(), v)
    with pytest.raises(LatticeError):
        is_primitive(A2, (0, 0))


# short vectors --------------------------------------------------------------------

def test_short_vectors_examples():
    vs = short_vectors(catalog("A2neg"), -2)
    assert [v.coords for v in vs] == [(0, 1), (0, -1), (1, 0), (-1, 0), (1, 1), (-1, -1)]
    assert sorted(v.coords for v in vs) == sorted(box_vectors(catalog("A2neg").gram, 2, -2))
    assert short_vectors(catalog("<-4>"), -2) == []


def test_short_vectors_e8_root_count():
    E = catalog("E8neg")
    roots = short_vectors(E, -2)
    assert len(roots) == len(e8_roots_standard()) == 240
    assert len({r.coords for r in roots}) == 240
    assert all(pair(E, r, r) == -2 for r in roots)


def test_short_vectors_refuses_indefinite():
    with pytest.raises(LatticeError):
        short_vectors(catalog("U"), -2)
    with pytest.raises(LatticeError):
        short_vectors(catalog("A2neg"), 2)


def _box_bound(g, norm):
    # |x_i| <= sqrt(|norm| * ((-G)^{-1})_ii) on the ellipsoid
    inv = sympy.Matrix(g).applyfunc(lambda t: -t).inv()
    return max(int(sympy.floor(sympy.sqrt(abs(norm) * inv[i, i]))) for i in range(len(g)))


neg_def = st.integers(1, 3).flatmap(lambda n: even_grams(n, -10, 10)).filter(
    lambda g: LatticeModel(g).is_negative_definite())


@given(neg_def, st.sampled_from([-2, -4, -6, -8]))
def test_short_vectors_match_box_bruteforce(g, norm):
    L = LatticeModel(g)
    got = sorted(v.coords for v in short_vectors(L, norm))
    ref = box_vectors(g, _box_bound(g, norm), norm)
    assert got == ref
    assert sorted(v.coords for v in short_vectors_box(L, norm, _box_bound(g, norm))) == ref
