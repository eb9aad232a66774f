"""JSON readers and writers for every value the CLI exchanges.

Rationals are always strings ``"p/q"`` (integers without ``/1``).
"""
import json

from .clifford import CliffordChern, P3Chern
from .cubic import KuznetsovLattice
from .functors import FunctorWord
from .lattice import LatticeModel, LatticeVector
from .mukai import MukaiVector
from .period import PeriodPoint
from .rational import as_fraction, fmt
from .tilt import TiltClass, Wall


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def lattice_to_json(L):
    doc = {"gram": [list(row) for row in L.gram]}
    if L.label:
        doc["label"] = L.label
    return doc


def lattice_from_json(doc):
    return LatticeModel(doc["gram"], doc.get("label"))


def vector_to_json(v):
    return {"coords": list(v.coords if isinstance(v, LatticeVector) else v)}


def vector_from_json(doc, L):
    coords = doc["coords"] if isinstance(doc, dict) else doc
    return L.vector(coords)


def mukai_to_json(v):
    return {"r": v.r, "c": list(v.c), "s": fmt(v.s)}


def mukai_from_json(doc, model=None):
    return MukaiVector(doc["r"], doc["c"], as_fraction(doc["s"]), model)


def kuznetsov_to_json(K):
    doc = lattice_to_json(K.full)
    doc["lambda1"] = list(K.lambda1.coords)
    doc["lambda2"] = list(K.lambda2.coords)
    return doc


def kuznetsov_from_json(doc):
    L = lattice_from_json(doc)
    return KuznetsovLattice(L, L.vector(doc["lambda1"]), L.vector(doc["lambda2"]))


def tilt_to_json(c):
    return [fmt(x) for x in c]


def tilt_from_json(doc):
    seq = doc["c"] if isinstance(doc, dict) else doc
    return TiltClass(*(as_fraction(x) for x in seq))


def clifford_to_json(b):
    vals = (b.b0, b.b1, b.b2) if isinstance(b, CliffordChern) else (b.c0, b.c1, b.c2)
    return {"c": [fmt(x) for x in vals]}


def clifford_from_json(doc, cls=CliffordChern):
    seq = doc["c"] if isinstance(doc, dict) else doc
    return cls(*(as_fraction(x) for x in seq))


def p3_from_json(doc):
    return clifford_from_json(doc, P3Chern)


def wall_to_json(w):
    doc = {"kind": w.kind}
    if w.center is not None:
        doc["center"] = fmt(w.center)
        doc["radius_sq"] = fmt(w.radius_sq)
    if w.beta is not None:
        doc["beta"] = fmt(w.beta)
    if w.witness is not None:
        doc["witness_w"] = tilt_to_json(w.witness[1])
    return doc


def wall_from_json(doc):
    get = lambda k: as_fraction(doc[k]) if k in doc else None
    return Wall(doc["kind"], center=get("center"), radius_sq=get("radius_sq"), beta=get("beta"))


def word_to_json(w):
    return {"twist": w.twist, "shift": w.shift, "tau": w.tau}


def word_from_json(doc):
    if isinstance(doc, list):
        return FunctorWord(*doc)
    return FunctorWord(doc["twist"], doc["shift"], doc["tau"])


def dims_to_json(dims):
    return {str(k): v for k, v in sorted(dims.items())}


def dims_from_json(doc):
    return {int(k): int(v) for k, v in doc.items()}


def period_to_json(p):
    return {"x": [fmt(t) for t in p.x], "y": [fmt(t) for t in p.y]}


def period_from_json(doc):
    return PeriodPoint(tuple(as_fraction(t) for t in doc["x"]), tuple(as_fraction(t) for t in doc["y"]))
