"""Algebraic Mukai lattice of a polarized K3 surface.

A class is written ``(r, c, s)`` with ``r`` the rank, ``c`` a vector in the
Neron-Severi lattice and ``s`` the degree-four part. The square root of the
Todd class of a K3 surface is ``(1, 0, 1)``.
"""
from dataclasses import dataclass
from fractions import Fraction

from .intmat import bilinear, signature
from .lattice import LatticeError, LatticeModel


@dataclass(frozen=True)
class PolarizedK3Model:
    ns_gram: tuple

    def __post_init__(self):
        ns = LatticeModel(self.ns_gram)  # checks square, symmetric, even
        object.__setattr__(self, "ns_gram", ns.gram)
        p, m, z = signature(ns.gram)
        if (p, z) != (1, 0):
            raise LatticeError(f"Neron-Severi lattice must be hyperbolic, got signature {(p, m)}")

    @property
    def ns_rank(self):
        return len(self.ns_gram)

    def intersect(self, a, b):
        return bilinear(self.ns_gram, a, b)


@dataclass(frozen=True)
class MukaiVector:
    r: int
    c: tuple
    s: Fraction
    model: PolarizedK3Model = None

    def __post_init__(self):
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "c", tuple(int(x) for x in self.c))
        s = Fraction(self.s)
        if (2 * s).denominator != 1:
            raise LatticeError(f"degree-four component {s} is not a half-integer")
        object.__setattr__(self, "s", s)
        if self.model is not None and len(self.c) != self.model.ns_rank:
            raise LatticeError("NS component has the wrong length")

    def __add__(self, other):
        return MukaiVector(self.r + other.r, tuple(a + b for a, b in zip(self.c, other.c)),
                           self.s + other.s, self.model)

    def __neg__(self):
        return MukaiVector(-self.r, tuple(-a for a in self.c), -self.s, self.model)

    def __mul__(self, k):
        return MukaiVector(k * self.r, tuple(k * a for a in self.c), k * self.s, self.model)

    __rmul__ = __mul__

    def is_zero(self):
        return self.r == 0 and self.s == 0 and not any(self.c)


def mukai_vector(S, r, c, c2):
    """``v(E) = ch(E) * sqrt(td(S))`` for a class of rank ``r``, ``c1 = c``, ``c2``."""
    c = tuple(c)
    if len(c) != S.ns_rank:
        raise LatticeError("NS component has the wrong length")
    c_sq = S.intersect(c, c)
    s = Fraction(c_sq, 2) - c2 + r
    assert s.denominator == 1, "even NS lattice gives an integral Mukai vector"
    return MukaiVector(r, c, s, S)


def mukai_pairing(S, v, w):
    """``c_v.c_w - r_v s_w - s_v r_w``, which equals ``-chi(E, F)`` on sheaves."""
    for u in (v, w):
        if len(u.c) != S.ns_rank or (u.model is not None and u.model != S):
            raise LatticeError("Mukai vector belongs to a different model")
    return S.intersect(v.c, w.c) - v.r * w.s - v.s * w.r


SPHERICAL = "spherical"
ISOTROPIC = "isotropic"
POSITIVE = "positive"
NEGATIVE_OTHER = "negative-other"


def classify(v, S=None):
    S = S if S is not None else v.model
    if S is None:
        raise LatticeError("no K3 model attached to the vector")
    if v.is_zero():
        raise LatticeError("cannot classify the zero vector")
    sq = mukai_pairing(S, v, v)
    if sq == -2:
        return SPHERICAL
    if sq == 0:
        return ISOTROPIC
    return POSITIVE if sq > 0 else NEGATIVE_OTHER
