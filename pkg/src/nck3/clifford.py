"""Numerical side of the sheaf of even Clifford algebras on the base threefold.

Classes on the base are ``(ch0, ch1.h^2, ch2.h)``; the twisted character
multiplies by ``1 - 11/32 l`` with ``l`` the class of a line.
"""
from dataclasses import dataclass
from fractions import Fraction

from .rational import as_fraction
from .tilt import INF, TiltError, TiltPoint, TiltClass, slope

CORRECTION = Fraction(11, 32)
PRESET_KEYS = ("B-2", "B-1", "B0", "B1", "B2", "B3")


@dataclass(frozen=True)
class P3Chern:
    c0: Fraction
    c1: Fraction
    c2: Fraction

    def __post_init__(self):
        for name in ("c0", "c1", "c2"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))


@dataclass(frozen=True)
class CliffordChern:
    b0: Fraction
    b1: Fraction
    b2: Fraction

    def __post_init__(self):
        for name in ("b0", "b1", "b2"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def of(cls, seq):
        b0, b1, b2 = seq
        return cls(b0, b1, b2)

    def as_tilt(self):
        return TiltClass(self.b0, self.b1, self.b2)


def clifford_twist(c):
    """``ch(Forg E) (1 - 11/32 l)`` truncated in degree two."""
    return CliffordChern(c.c0, c.c1, c.c2 - CORRECTION * c.c0)


def clifford_untwist(b):
    return P3Chern(b.b0, b.b1, b.b2 + CORRECTION * b.b0)


def clifford_discriminant(b):
    """``b1^2 - 2 b0 b2``; negative values rule out slope-semistable modules."""
    return b.b1 * b.b1 - 2 * b.b0 * b.b2


def _cc(x):
    return x if isinstance(x, CliffordChern) else CliffordChern.of(x)


def chain_slopes(left, right, alpha_sq, beta=-1):
    """Tilt slopes at ``(alpha^2, beta)`` of the three left and three right classes."""
    left, right = list(left), list(right)
    if len(left) != 3 or len(right) != 3:
        raise TiltError("the inducing chain needs exactly three classes on each side")
    p = TiltPoint(alpha_sq, beta)
    out = []
    for b in map(_cc, left + right):
        t = b.as_tilt()
        mu = slope(t, p)
        if mu == INF:
            raise TiltError(f"class {t} has Im Z = 0 at the evaluation point")
        assert slope(-t, p) == mu, "shift must not change the slope"
        out.append(mu)
    return out


def verify_inducing_chain(left, right, alpha_sq):
    """Whether ``mu(L0[1]) < mu(L1[1]) < mu(L2[1]) < 0 < mu(R0) < mu(R1) < mu(R2)`` at ``beta = -1``."""
    mus = chain_slopes(left, right, alpha_sq)
    chain = mus[:3] + [Fraction(0)] + mus[3:]
    return all(a < b for a, b in zip(chain, chain[1:]))


@dataclass(frozen=True)
class PresetReport:
    valid: bool
    discriminants: dict
    missing: tuple
    failures: tuple


def validate_presets(table):
    """Check a table ``{"B-2": [...], ..., "B3": [...]}``: every entry must have zero discriminant."""
    missing = tuple(k for k in PRESET_KEYS if k not in table)
    discs = {}
    failures = []
    for k, val in table.items():
        d = clifford_discriminant(_cc(val))
        discs[k] = d
        if d != 0:
            failures.append(k)
    return PresetReport(not missing and not failures, discs, missing, tuple(failures))
