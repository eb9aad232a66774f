import os
import random
import subprocess
import sys

import pytest

from nck3 import _pykernels, kernels

from oracles import box_vectors

compiled = pytest.mark.skipif(kernels.BACKEND != "compiled", reason="extension not built")


def _sign_normalized(xs):
    out = []
    for x in xs:
        first = next(t for t in x if t)
        if first > 0:
            out.append(tuple(x))
    return sorted(out)


def test_python_box_scan_matches_oracle():
    rng = random.Random(31)
    for _ in range(30):
        n = rng.randint(1, 3)
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2 * rng.randint(-3, 3)
            for j in range(i + 1, n):
                g[i][j] = g[j][i] = rng.randint(-4, 4)
        target = 2 * rng.randint(-3, 3)
        ref = _sign_normalized(box_vectors(g, 3, target))
        assert kernels.box_scan(g, 3, target, backend="python") == ref


@compiled
def test_box_scan_backends_agree():
    rng = random.Random(32)
    for _ in range(40):
        n = rng.randint(1, 4)
        g = [[0] * n for _ in range(n)]
        for i in range(n):
            g[i][i] = 2 * rng.randint(-5, 5)
            for j in range(i + 1, n):
                g[i][j] = g[j][i] = rng.randint(-6, 6)
        b = rng.randint(1, 4)
        t = 2 * rng.randint(-4, 4)
        assert kernels.box_scan(g, b, t, backend="compiled") == kernels.box_scan(g, b, t, backend="python")


@compiled
def test_wall_candidates_backends_agree():
    rng = random.Random(33)
    for _ in range(40):
        v = (rng.randint(0, 6), rng.randint(-6, 6), rng.randint(-12, 6))
        b = rng.randint(1, 5)
        assert kernels.wall_candidates(v, b, backend="compiled") == \
            kernels.wall_candidates(v, b, backend="python")


@compiled
def test_large_inputs_fall_back():
    v = (10 ** 6, 0, -10 ** 6)
    assert kernels.wall_candidates(v, 1) == sorted(_pykernels.wall_candidates(v, 1))
    with pytest.raises(RuntimeError):
        kernels.wall_candidates(v, 1, backend="compiled")
    g = [[2 * 10 ** 18]]
    assert kernels.box_scan(g, 1, 2 * 10 ** 18) == [(1,)]


def test_pure_environment_variable():
    env = dict(os.environ, NCK3_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from nck3 import kernels; print(kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
