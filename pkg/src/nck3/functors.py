"""Words in line-bundle twists, shifts and a covering involution.

A word ``(twist, shift, tau)`` stands for ``tau^t o [shift] o L^twist``. The
group is abelian: twists commute with the spherical twist and the involution
fixes the polarization in every geometry considered here.
"""
from dataclasses import dataclass
import json
import os
from math import gcd
from importlib import resources


@dataclass(frozen=True, order=True)
class FunctorWord:
    twist: int = 0
    shift: int = 0
    tau: int = 0

    def __post_init__(self):
        object.__setattr__(self, "tau", self.tau % 2)

    def __add__(self, other):
        return compose(self, other)

    def __neg__(self):
        return inverse(self)

    def __mul__(self, k):
        return power(self, k)

    __rmul__ = __mul__

    def is_pure_shift(self):
        return self.twist == 0 and self.tau == 0

    def as_list(self):
        return [self.twist, self.shift, self.tau]


IDENTITY = FunctorWord()


def compose(a, b):
    return FunctorWord(a.twist + b.twist, a.shift + b.shift, (a.tau + b.tau) % 2)


def inverse(a):
    return FunctorWord(-a.twist, -a.shift, a.tau)


def power(a, k):
    return FunctorWord(k * a.twist, k * a.shift, (k * a.tau) % 2)


def line_bundle(k=1):
    return FunctorWord(twist=k)


def shift(n=1):
    return FunctorWord(shift=n)


@dataclass(frozen=True)
class GeometryPreset:
    name: str
    m: int
    d: int
    T: FunctorWord
    S: FunctorWord
    description: str = ""

    def __post_init__(self):
        if not 1 <= self.d < self.m:
            raise ValueError(f"need 1 <= d < m, got d={self.d}, m={self.m}")


def _data_path(name):
    # files missing from an override directory fall back to the shipped copy
    override = os.environ.get("NCK3_DATA_DIR")
    if override and os.path.exists(os.path.join(override, name)):
        return os.path.join(override, name)
    return str(resources.files("nck3") / "data" / name)


def load_json(name):
    with open(_data_path(name)) as fh:
        return json.load(fh)


def load_presets():
    raw = load_json("presets.json")
    return {name: GeometryPreset(name, e["m"], e["d"], FunctorWord(*e["T"]), FunctorWord(*e["S"]),
                                 e.get("description", ""))
            for name, e in raw.items()}


def preset(name):
    presets = load_presets()
    try:
        return presets[name]
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(sorted(presets))}") from None


def rho_sigma(p):
    """``rho = T o L^d`` and ``sigma = S o T o L^m``."""
    rho = p.T + line_bundle(p.d)
    sigma = p.S + p.T + line_bundle(p.m)
    return rho, sigma


@dataclass(frozen=True)
class SerreReport:
    word: FunctorWord
    exponent: int
    cy_dimension: object
    c: int
    rho: FunctorWord
    sigma: FunctorWord


def serre_ku(p):
    """Power ``S^{d/c} = rho^{-m/c} o sigma^{d/c}`` of the Serre functor of the Kuznetsov component."""
    c = gcd(p.d, p.m)
    rho, sigma = rho_sigma(p)
    w = power(rho, -(p.m // c)) + power(sigma, p.d // c)
    exponent = p.d // c
    cy = None
    if w.is_pure_shift() and w.shift % exponent == 0:
        cy = w.shift // exponent
    return SerreReport(w, exponent, cy, c, rho, sigma)


def hochschild_ku(hh_ambient, n_exceptional):
    """Hochschild homology of the complement of ``n_exceptional`` exceptional objects."""
    dims = {int(k): int(v) for k, v in hh_ambient.items()}
    if any(v < 0 for v in dims.values()):
        raise ValueError("dimensions must be nonnegative")
    if n_exceptional < 0:
        raise ValueError("number of exceptional objects must be nonnegative")
    if dims.get(0, 0) < n_exceptional:
        raise ValueError("degree-0 Hochschild homology is smaller than the number of exceptional objects")
    dims[0] = dims.get(0, 0) - n_exceptional
    return {k: dims[k] for k in sorted(dims)}
