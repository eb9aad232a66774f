"""Period points ``eta = x + i y`` in ``L (x) C`` for rational ``x, y``.

The central charge is ``Z(u) = (x, u) + i (y, u)``. A point lies in ``P``
when ``x, y`` span a positive definite plane, and in ``P0`` when moreover no
``(-2)``-class is orthogonal to both.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from . import intmat
from .lattice import LatticeError, orthogonal_complement, short_vectors
from .rational import as_fraction


class PeriodError(ValueError):
    pass


@dataclass(frozen=True)
class PeriodPoint:
    x: tuple
    y: tuple

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(as_fraction(t) for t in self.x))
        object.__setattr__(self, "y", tuple(as_fraction(t) for t in self.y))
        if len(self.x) != len(self.y):
            raise PeriodError("real and imaginary parts have different lengths")


def _check(L, p):
    if len(p.x) != L.rank:
        raise PeriodError(f"period point of length {len(p.x)} in a rank {L.rank} lattice")


def _coords(u):
    return u.coords if hasattr(u, "coords") else tuple(u)


def eta_vector(L, re_values, im_values):
    """The ``x + i y`` with ``(x, b_i) = re_values[i]`` and ``(y, b_i) = im_values[i]``."""
    re_values = [as_fraction(t) for t in re_values]
    im_values = [as_fraction(t) for t in im_values]
    if len(re_values) != L.rank or len(im_values) != L.rank:
        raise PeriodError("need one value per basis vector")
    if L.det() == 0:
        raise PeriodError("degenerate Gram matrix")
    x = intmat.rational_solve(L.gram, re_values)
    y = intmat.rational_solve(L.gram, im_values)
    return PeriodPoint(tuple(x), tuple(y))


def central_charge(L, p, u):
    u = _coords(u)
    return (intmat.bilinear(L.gram, p.x, u), intmat.bilinear(L.gram, p.y, u))


def plane_gram(L, p):
    _check(L, p)
    xx = intmat.bilinear(L.gram, p.x, p.x)
    xy = intmat.bilinear(L.gram, p.x, p.y)
    yy = intmat.bilinear(L.gram, p.y, p.y)
    return ((xx, xy), (xy, yy))


def in_P(L, p):
    (xx, xy), (_, yy) = plane_gram(L, p)
    return xx > 0 and xx * yy - xy * xy > 0


@dataclass(frozen=True)
class P0Report:
    member: bool
    witness: object = None
    complement_rank: int = 0


def _integral(v):
    m = lcm(*(t.denominator for t in v))
    return [int(t * m) for t in v]


def spherical_orthogonal(L, p):
    """All ``(-2)``-classes orthogonal to ``x`` and ``y``, as ambient vectors."""
    _check(L, p)
    vs = [L.vector(_integral(v)) for v in (p.x, p.y) if any(v)]
    if not vs:
        raise PeriodError("period point is zero")
    perp = orthogonal_complement(L, vs)
    if perp.rank == 0:
        return [], 0
    sub = perp.lattice()
    if not sub.is_negative_definite():
        raise PeriodError("orthogonal complement of the period plane is not negative definite; "
                          "membership cannot be decided by enumeration")
    out = []
    for s in short_vectors(sub, -2):
        coords = [0] * L.rank
        for c, b in zip(s.coords, perp.basis):
            if c:
                coords = [a + c * t for a, t in zip(coords, b.coords)]
        out.append(L.vector(coords))
    return out, perp.rank


def in_P0(L, p):
    if not in_P(L, p):
        raise PeriodError("point is not in P")
    deltas, r = spherical_orthogonal(L, p)
    if deltas:
        return P0Report(False, deltas[0], r)
    return P0Report(True, None, r)


def wall_test(L, p, v, w):
    """Whether ``Z(v)`` and ``Z(w)`` are real-collinear at ``p``."""
    zv = central_charge(L, p, v)
    if zv == (0, 0):
        raise PeriodError("Z(v) = 0")
    zw = central_charge(L, p, w)
    return zv[0] * zw[1] - zv[1] * zw[0] == 0


def load_fixtures():
    """Shipped test lattices ``{name: (LatticeModel, PeriodPoint)}``."""
    from .functors import load_json
    from .lattice import LatticeModel
    return {name: (LatticeModel(e["gram"], name), PeriodPoint(e["x"], e["y"]))
            for name, e in load_json("period_fixtures.json").items()}
