import os
import random
import subprocess
import sys

from hypothesis import given, strategies as st
from gmpy2 import mpq

from moritakit import _core
from moritakit._core import _pycore

SCRIPT = "from moritakit import BACKEND; print(BACKEND)"


def backend_under(env_value):
    env = dict(os.environ)
    env.pop("MORITAKIT_PURE_PYTHON", None)
    if env_value is not None:
        env["MORITAKIT_PURE_PYTHON"] = env_value
    return subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True,
                          text=True, check=True).stdout.strip()


def test_environment_selects_fallback():
    assert backend_under("1") == "python"
    assert backend_under(None) in ("cython", "python")


def test_pure_python_analysis_matches():
    env = dict(os.environ)
    outs = []
    for flag in ("1", "0"):
        env["MORITAKIT_PURE_PYTHON"] = flag
        outs.append(subprocess.run([sys.executable, "-m", "moritakit.cli", "analyze", "ex14", "--json"],
                                   env=env, capture_output=True, text=True, check=True).stdout)
    assert outs[0] == outs[1]


@st.composite
def sparse_rows(draw):
    # large enough to reach the compiled path, which skips tiny inputs
    rng = random.Random(draw(st.integers(0, 2**32)))
    ncols = draw(st.integers(20, 40))
    nrows = draw(st.integers(20, 40))
    density = draw(st.sampled_from([0.05, 0.2, 0.6, 1.0]))
    p = draw(st.sampled_from([0, 2, 3, 101, 65521]))
    rows = []
    for _ in range(nrows):
        row = {}
        for j in range(ncols):
            if rng.random() < density:
                v = rng.randint(-6, 6)
                v = v % p if p else mpq(v)
                if v:
                    row[j] = v
        rows.append(row)
    return rows, ncols, p


@given(sparse_rows())
def test_kernels_agree(case):
    rows, ncols, p = case
    assert _core.rref_rows(rows, ncols, p) == _pycore.rref_rows(rows, ncols, p)
