import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nck3.lattice import LatticeError
from nck3.mukai import (
    MukaiVector,
    PolarizedK3Model,
    classify,
    mukai_pairing,
    mukai_vector,
)

from oracles import random_hyperbolic_gram, riemann_roch_chi

S2 = PolarizedK3Model([[2]])


def test_mukai_vector_examples():
    assert mukai_vector(S2, 1, (0,), 0) == MukaiVector(1, (0,), 1, S2)
    assert mukai_vector(S2, 0, (0,), -1) == MukaiVector(0, (0,), 1, S2)
    assert mukai_vector(S2, 1, (1,), 0) == MukaiVector(1, (1,), 2, S2)


def test_pairing_examples():
    o = MukaiVector(1, (0,), 1)
    assert mukai_pairing(S2, o, o) == -2
    assert mukai_pairing(S2, MukaiVector(0, (0,), 1), MukaiVector(1, (0,), 0)) == -1
    h = MukaiVector(1, (1,), 2)
    assert mukai_pairing(S2, h, h) == -2
    # chi(O(H)) = 3 by Riemann-Roch
    assert -mukai_pairing(S2, o, h) == riemann_roch_chi([[2]], (0,), (1,)) == 3


def test_classify_examples():
    assert classify(MukaiVector(1, (0,), 1), S2) == "spherical"
    assert classify(MukaiVector(0, (0,), 1), S2) == "isotropic"
    assert classify(MukaiVector(1, (0,), -1), S2) == "positive"
    assert classify(MukaiVector(1, (0,), 3), S2) == "negative-other"
    with pytest.raises(LatticeError):
        classify(MukaiVector(0, (0,), 0), S2)


def test_model_validation():
    with pytest.raises(LatticeError):
        PolarizedK3Model([[-2]])
    with pytest.raises(LatticeError):
        PolarizedK3Model([[2, 0], [0, 2]])
    with pytest.raises(LatticeError):
        MukaiVector(1, (0,), Fraction(1, 3))
    with pytest.raises(LatticeError):
        mukai_pairing(S2, MukaiVector(1, (0, 0), 0), MukaiVector(1, (0,), 0))


def test_pairing_is_minus_euler_characteristic_of_line_bundles():
    rng = random.Random(20240)
    for _ in range(200):
        g = random_hyperbolic_gram(rng)
        S = PolarizedK3Model(g)
        n = len(g)
        c1 = tuple(rng.randint(-4, 4) for _ in range(n))
        c2 = tuple(rng.randint(-4, 4) for _ in range(n))
        v1, v2 = mukai_vector(S, 1, c1, 0), mukai_vector(S, 1, c2, 0)
        assert -mukai_pairing(S, v1, v2) == riemann_roch_chi(g, c1, c2)


mv = st.builds(lambda r, c, s: MukaiVector(r, (c,), Fraction(s, 2)),
               st.integers(-9, 9), st.integers(-9, 9), st.integers(-20, 20))


@given(mv, mv, mv, st.integers(-4, 4))
def test_pairing_symmetric_bilinear(u, v, w, k):
    S = PolarizedK3Model([[4]])
    assert mukai_pairing(S, u, v) == mukai_pairing(S, v, u)
    assert mukai_pairing(S, u + v, w) == mukai_pairing(S, u, w) + mukai_pairing(S, v, w)
    assert mukai_pairing(S, k * u, w) == k * mukai_pairing(S, u, w)


def test_point_and_ideal_classes_span_u():
    p, i = MukaiVector(0, (0,), 1), MukaiVector(1, (0,), 0)
    gram = [[mukai_pairing(S2, a, b) for b in (p, i)] for a in (p, i)]
    assert gram == [[0, -1], [-1, 0]]
    gram = [[mukai_pairing(S2, a, b) for b in (p, -i)] for a in (p, -i)]
    assert gram == [[0, 1], [1, 0]]
