import random
from fractions import Fraction as F

import pytest

from nck3.lattice import LatticeModel, catalog, pair
from nck3.period import (
    PeriodError,
    PeriodPoint,
    central_charge,
    eta_vector,
    in_P,
    in_P0,
    load_fixtures,
    spherical_orthogonal,
    wall_test,
)

from oracles import naive_in_P, naive_spherical, sympy_solve

A2 = catalog("A2")
X, Y = (1, 0), (1, 2)


def test_eta_examples():
    p = eta_vector(A2, [1, 0], [0, 0])
    assert p.x == (F(2, 3), F(1, 3)) and p.y == (0, 0)
    p = eta_vector(A2, [0, 0], [1, 0])
    assert p.x == (0, 0) and p.y == (F(2, 3), F(1, 3))
    with pytest.raises(PeriodError):
        eta_vector(LatticeModel([[0, 0], [0, 2]]), [1, 0], [0, 1])
    with pytest.raises(PeriodError):
        eta_vector(A2, [1], [0, 1])


def test_eta_residual_zero():
    rng = random.Random(21)
    for g in (A2.gram, catalog("A2+<-2>").gram, catalog("U+A2").gram, catalog("mukai").gram):
        L = LatticeModel(g)
        n = L.rank
        for _ in range(5):
            re = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
            im = [F(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)]
            p = eta_vector(L, re, im)
            for i, b in enumerate(L.basis()):
                assert central_charge(L, p, b) == (re[i], im[i])
            if n <= 4:
                assert list(p.x) == sympy_solve(g, re)


def test_in_P_examples():
    assert in_P(A2, PeriodPoint(X, Y))
    assert not in_P(A2, PeriodPoint(X, X))
    L = catalog("A2+<-2>")
    assert not in_P(L, PeriodPoint((0, 0, 1), (1, 0, 0)))


def test_in_P0_examples():
    r = in_P0(catalog("A2+<-2>"), PeriodPoint((1, 0, 0), (1, 2, 0)))
    assert not r.member and r.witness.coords == (0, 0, 1)
    assert in_P0(catalog("A2+<-4>"), PeriodPoint((1, 0, 0), (1, 2, 0))).member
    r = in_P0(A2, PeriodPoint(X, Y))
    assert r.member and r.complement_rank == 0


def test_in_P0_refusals():
    with pytest.raises(PeriodError):
        in_P0(A2, PeriodPoint(X, X))
    # complement U is indefinite: enumeration cannot decide
    L = catalog("A2+U")
    with pytest.raises(PeriodError):
        in_P0(L, PeriodPoint((1, 0, 0, 0), (1, 2, 0, 0)))


def _check_against_oracle(L, p):
    g = L.gram
    x = [t for t in p.x]
    y = [t for t in p.y]
    assert in_P(L, p) == naive_in_P(g, x, y)
    if not in_P(L, p):
        return
    ref = naive_spherical(g, x, y)
    found, _ = spherical_orthogonal(L, p)
    assert sorted(v.coords for v in found) == sorted(ref)
    r = in_P0(L, p)
    assert r.member == (not ref)
    if r.witness is not None:
        w = r.witness
        assert pair(L, w, w) == -2
        assert central_charge(L, p, w) == (0, 0)


def test_shipped_fixtures_match_box_scan():
    fixtures = load_fixtures()
    assert sorted(fixtures) == ["A2", "A2+<-2>", "A2+<-4>"]
    for L, p in fixtures.values():
        assert L.rank <= 4
        _check_against_oracle(L, p)


@pytest.mark.parametrize("name", ["A2+A2neg", "A2+<-2>+<-2>", "A2+<-2>+<-6>", "A2+<-4>+<-4>"])
def test_rank_four_lattices_match_box_scan(name):
    L = catalog(name)
    for p in (PeriodPoint((1, 0, 0, 0), (1, 2, 0, 0)), PeriodPoint((2, 1, 0, 0), (0, 1, 0, 0)),
              PeriodPoint((1, 0, 0, 0), (0, 1, 0, 0))):
        _check_against_oracle(L, p)


def test_in_P0_implies_in_P():
    rng = random.Random(22)
    L = catalog("A2+<-2>+<-4>")
    for _ in range(100):
        x = tuple(rng.randint(-3, 3) for _ in range(4))
        y = tuple(rng.randint(-3, 3) for _ in range(4))
        p = PeriodPoint(x, y)
        if not in_P(L, p):
            with pytest.raises(PeriodError):
                in_P0(L, p)
            continue
        try:
            r = in_P0(L, p)
        except PeriodError:
            continue
        assert naive_in_P(L.gram, x, y)
        _check_against_oracle(L, p)


def test_wall_test_examples():
    p = eta_vector(A2, [1, 0], [0, 1])
    assert not wall_test(A2, p, (1, 0), (0, 1))
    assert wall_test(A2, p, (1, 0), (3, 0))
    assert not wall_test(A2, p, (1, 0), (1, 1))
    with pytest.raises(PeriodError):
        wall_test(A2, p, (0, 0), (1, 1))
