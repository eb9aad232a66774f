"""Tilt stability reduced to rational triples ``(H^n ch0, H^{n-1} ch1, H^{n-2} ch2)``.

``alpha`` only ever appears squared, so a point of the upper half plane is
stored as ``(alpha_sq, beta)`` and every quantity stays rational.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .kernels import wall_candidates
from .rational import as_fraction

INF = float("inf")


class TiltError(ValueError):
    pass


@dataclass(frozen=True)
class TiltClass:
    e0: Fraction
    e1: Fraction
    e2: Fraction

    def __post_init__(self):
        for name in ("e0", "e1", "e2"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def of(cls, seq):
        e0, e1, e2 = seq
        return cls(e0, e1, e2)

    def __iter__(self):
        return iter((self.e0, self.e1, self.e2))

    def __add__(self, other):
        return TiltClass(self.e0 + other.e0, self.e1 + other.e1, self.e2 + other.e2)

    def __sub__(self, other):
        return TiltClass(self.e0 - other.e0, self.e1 - other.e1, self.e2 - other.e2)

    def __neg__(self):
        return TiltClass(-self.e0, -self.e1, -self.e2)

    def __mul__(self, k):
        k = as_fraction(k)
        return TiltClass(k * self.e0, k * self.e1, k * self.e2)

    __rmul__ = __mul__

    def is_zero(self):
        return not (self.e0 or self.e1 or self.e2)


@dataclass(frozen=True)
class TiltPoint:
    alpha_sq: Fraction
    beta: Fraction

    def __post_init__(self):
        a = as_fraction(self.alpha_sq)
        if a <= 0:
            raise TiltError("alpha^2 must be positive")
        object.__setattr__(self, "alpha_sq", a)
        object.__setattr__(self, "beta", as_fraction(self.beta))


def _cls(c):
    return c if isinstance(c, TiltClass) else TiltClass.of(c)


def twist_class(c, beta):
    """``ch^beta = e^{-beta H} ch``."""
    c = _cls(c)
    b = as_fraction(beta)
    return TiltClass(c.e0, c.e1 - b * c.e0, c.e2 - b * c.e1 + b * b / 2 * c.e0)


def central_charge(c, p):
    """``Z = alpha^2/2 ch0^beta - ch2^beta + i ch1^beta`` as ``(Re, Im)``."""
    t = twist_class(c, p.beta)
    return (p.alpha_sq / 2 * t.e0 - t.e2, t.e1)


def slope(c, p):
    """``-Re Z / Im Z``; ``+inf`` when ``Im Z = 0``."""
    re, im = central_charge(c, p)
    if re == 0 and im == 0:
        raise TiltError("central charge vanishes")
    if im == 0:
        return INF
    return -re / im


def discriminant(c):
    c = _cls(c)
    return c.e1 * c.e1 - 2 * c.e0 * c.e2


@dataclass(frozen=True)
class SupportCheck:
    kernel: TiltClass
    delta_on_kernel: Fraction
    passed: bool


def support_check(p):
    """Negativity of the discriminant on ``ker Z``, which is spanned by ``(1, beta, (alpha^2+beta^2)/2)``."""
    if not isinstance(p, TiltPoint):
        p = TiltPoint(*p)
    k = TiltClass(1, p.beta, (p.alpha_sq + p.beta * p.beta) / 2)
    assert central_charge(k, p) == (0, 0)
    delta = discriminant(k)
    assert delta == -p.alpha_sq
    return SupportCheck(k, delta, delta < 0)


def rotate_charge(c, p, mu):
    """``(-mu - i) Z(c)``; a positive multiple of ``Z/u`` with ``u`` of slope ``mu``."""
    mu = as_fraction(mu)
    x, y = central_charge(c, p)
    return (-mu * x + y, -mu * y - x)


# walls ------------------------------------------------------------------------

VERTICAL = "vertical"
SEMICIRCLE = "semicircle"
EVERYWHERE = "everywhere"
EMPTY = "empty"
_KIND_ORDER = {VERTICAL: 0, SEMICIRCLE: 1, EVERYWHERE: 2, EMPTY: 3}


@dataclass(frozen=True)
class Wall:
    kind: str
    center: Fraction = None
    radius_sq: Fraction = None
    beta: Fraction = None
    witness: tuple = None

    def key(self):
        return (_KIND_ORDER[self.kind],
                self.beta if self.beta is not None else Fraction(0),
                self.center if self.center is not None else Fraction(0),
                self.radius_sq if self.radius_sq is not None else Fraction(0))

    def locus(self):
        return (self.kind, self.center, self.radius_sq, self.beta)

    def contains(self, p):
        if self.kind == VERTICAL:
            return p.beta == self.beta
        if self.kind == SEMICIRCLE:
            return (p.beta - self.center) ** 2 + p.alpha_sq == self.radius_sq
        return self.kind == EVERYWHERE


def wall_coefficients(v, w):
    """``(A, B, C)`` with locus ``A(alpha^2 + beta^2) - 2 B beta + 2 C = 0``."""
    v, w = _cls(v), _cls(w)
    A = v.e0 * w.e1 - w.e0 * v.e1
    B = v.e0 * w.e2 - w.e0 * v.e2
    C = v.e1 * w.e2 - w.e1 * v.e2
    return A, B, C


def wall(v, w):
    """Numerical wall ``{mu(v) = mu(w)}`` in the ``(beta, alpha)`` half plane."""
    v, w = _cls(v), _cls(w)
    if v.is_zero() and w.is_zero():
        raise TiltError("both classes are zero")
    A, B, C = wall_coefficients(v, w)
    witness = (v, w)
    if A != 0:
        center = B / A
        radius_sq = (B * B - 2 * A * C) / (A * A)
        if radius_sq > 0:
            return Wall(SEMICIRCLE, center=center, radius_sq=radius_sq, witness=witness)
        return Wall(EMPTY, witness=witness)
    if B != 0:
        return Wall(VERTICAL, beta=C / B, witness=witness)
    if C == 0:
        return Wall(EVERYWHERE, witness=witness)
    return Wall(EMPTY, witness=witness)


def sample_wall_points(wl, count=20):
    """``count`` distinct rational points on a vertical or semicircular wall."""
    pts = []
    if wl.kind == VERTICAL:
        return [TiltPoint(Fraction(k, 3), wl.beta) for k in range(1, count + 1)]
    if wl.kind != SEMICIRCLE:
        raise TiltError(f"cannot sample a {wl.kind} wall")
    # beta = center + t*r0 with r0^2 <= radius_sq rational, alpha^2 = radius_sq - (beta-center)^2
    r0 = Fraction(1)
    while r0 * r0 >= wl.radius_sq:
        r0 /= 2
    for k in range(count):
        t = Fraction(2 * k - count + 1, count + 1)
        b = wl.center + t * r0
        a2 = wl.radius_sq - (b - wl.center) ** 2
        pts.append(TiltPoint(a2, b))
    return pts


@dataclass(frozen=True)
class WallScan:
    walls: tuple
    denom: int
    bound: int

    def __iter__(self):
        return iter(self.walls)

    def __len__(self):
        return len(self.walls)

    def __getitem__(self, i):
        return self.walls[i]


def enumerate_walls(v, denom, bound, backend=None):
    """Numerical walls for ``v`` from candidate subobject classes in a box.

    Candidates ``w`` have entries in ``(1/denom) Z`` with ``|denom * w_i| <= bound``.
    A candidate is kept when ``w`` and ``v - w`` both satisfy the Bogomolov
    inequality, the wall is a line or a genuine semicircle, and somewhere on
    the wall ``Im Z(w)`` and ``Im Z(v - w)`` lie weakly on the same side of
    zero (so both sit in the same half plane as ``Z(v)``). Identical loci are
    merged, keeping the witness of smallest box norm. Completeness beyond
    the box is not claimed.
    """
    v = _cls(v)
    if denom <= 0 or bound <= 0:
        raise TiltError("denom and bound must be positive")
    if discriminant(v) < 0:
        raise TiltError("v violates the Bogomolov inequality; no semistable object has this class")
    if v.e0 == 0 and v.e1 == 0:
        # Z(v) is a real constant: v has slope +inf at every point
        return WallScan((), denom, bound)
    scale = lcm(denom, *(x.denominator for x in v))
    vi = tuple(int(x * scale) for x in v)
    # candidates live on the coarser grid (1/denom) Z inside the scaled box
    step = scale // denom
    cands = [c for c in wall_candidates(vi, bound * step, backend)
             if not any(x % step for x in c)]
    # preferred witness: smallest box norm, then largest entries first
    cands.sort(key=lambda c: (max(abs(x) for x in c), tuple(-x for x in c)))
    found = {}
    for cand in cands:
        w = TiltClass(*(Fraction(x, scale) for x in cand))
        wl = wall(v, w)
        key = wl.locus()
        if key not in found:
            found[key] = wl
    walls = sorted(found.values(), key=Wall.key)
    return WallScan(tuple(walls), denom, bound)


def walls_intersect(w1, w2):
    """Whether two distinct walls meet in the open upper half plane."""
    if w1.locus() == w2.locus():
        return False
    if w1.kind == VERTICAL and w2.kind == VERTICAL:
        return False
    if w1.kind == VERTICAL or w2.kind == VERTICAL:
        vert, circ = (w1, w2) if w1.kind == VERTICAL else (w2, w1)
        return (vert.beta - circ.center) ** 2 < circ.radius_sq
    # two semicircles on the beta axis meet above it iff |r1 - r2| < d < r1 + r2
    d2 = (w1.center - w2.center) ** 2
    if d2 == 0:
        return False
    r1, r2 = w1.radius_sq, w2.radius_sq
    # d < r1 + r2  <=>  d2 - r1 - r2 < 2 sqrt(r1 r2)
    s = d2 - r1 - r2
    outer = s < 0 or s * s < 4 * r1 * r2
    # d > |r1 - r2|  <=>  d2 - r1 - r2 > -2 sqrt(r1 r2)
    inner = s > 0 or s * s < 4 * r1 * r2
    return outer and inner
