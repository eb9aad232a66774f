"""Compare the compiled and pure-Python enumeration kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case runs both backends, checks that they return identical results and
prints the best wall-clock time of ``--repeat`` runs.
"""
import argparse
import time

from nck3 import kernels
from nck3.lattice import catalog


def _best(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


CASES = [
    ("box_scan A2+<-6>, bound 20, norm 0",
     lambda b: kernels.box_scan(catalog("A2+<-6>").gram, 20, 0, backend=b)),
    ("box_scan A2+U, bound 8, norm 0",
     lambda b: kernels.box_scan(catalog("A2+U").gram, 8, 0, backend=b)),
    ("box_scan E8(-1) rank 8, bound 2, norm -2",
     lambda b: kernels.box_scan(catalog("E8neg").gram, 2, -2, backend=b)),
    ("wall_candidates v=(2,0,-2), bound 12",
     lambda b: kernels.wall_candidates((2, 0, -2), 12, backend=b)),
    ("wall_candidates v=(6,3,-9), bound 20",
     lambda b: kernels.wall_candidates((6, 3, -9), 20, backend=b)),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.BACKEND != "compiled":
        raise SystemExit("compiled extension not available; rebuild with "
                         "'pip install --no-build-isolation -e .'")
    print(f"{'case':45s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for name, fn in CASES:
        tp, rp = _best(lambda: fn("python"), args.repeat)
        tc, rc = _best(lambda: fn("compiled"), args.repeat)
        assert rp == rc, f"backends disagree on {name}"
        print(f"{name:45s} {tp * 1e3:9.1f}ms {tc * 1e3:9.1f}ms {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
