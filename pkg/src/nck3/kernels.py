"""Backend selection for the enumeration kernels.

The compiled extension is used when it imported and the inputs fit in
int64 arithmetic; otherwise the pure-Python versions run. Setting
``NCK3_PURE=1`` forces the Python backend.
"""
import os

from . import _pykernels

try:
    if os.environ.get("NCK3_PURE"):
        raise ImportError("pure backend requested")
    from . import _kernels as _ext
except ImportError:
    _ext = None

BACKEND = "compiled" if _ext is not None else "python"

# |v_i|, bound <= this keeps every wall_candidates intermediate below 2**62
_WALL_LIMIT = 500


def _box_fits(gram, bound, target):
    n = len(gram)
    gmax = max((abs(x) for row in gram for x in row), default=0)
    worst = n * n * max(gmax, 1) * (2 * bound) ** 2 * 4
    return worst < 2 ** 62 and abs(target) < 2 ** 62


def box_scan(gram, bound, target, backend=None):
    """Sorted nonzero sign-normalized ``x`` with ``|x_i| <= bound`` and norm ``target``."""
    gram = [[int(x) for x in row] for row in gram]
    use_ext = backend != "python" and _ext is not None and _box_fits(gram, bound, target)
    if backend == "compiled" and not use_ext:
        raise RuntimeError("compiled backend unavailable for these inputs")
    if not gram:
        return []
    fn = _ext.box_scan if use_ext else _pykernels.box_scan
    return sorted(fn(gram, int(bound), int(target)))


def wall_candidates(v, bound, backend=None):
    v = tuple(int(x) for x in v)
    use_ext = (backend != "python" and _ext is not None
               and max(max(abs(x) for x in v), bound) <= _WALL_LIMIT)
    if backend == "compiled" and not use_ext:
        raise RuntimeError("compiled backend unavailable for these inputs")
    fn = _ext.wall_candidates if use_ext else _pykernels.wall_candidates
    return sorted(fn(v, int(bound)))
