"""Compare the compiled elimination kernel against the pure-Python one.

    python3 benchmarks/bench_kernel.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import timeit

from gmpy2 import mpq

from moritakit._core import BACKEND, _pycore

try:
    from moritakit._core import _ccore
except ImportError:
    _ccore = None


def random_rows(rng: random.Random, nrows: int, ncols: int, density: float, p: int) -> list[dict]:
    rows = []
    for _ in range(nrows):
        row = {}
        for j in range(ncols):
            if rng.random() < density:
                v = rng.randint(-5, 5)
                if p:
                    v %= p
                if v:
                    row[j] = v if p else mpq(v)
        rows.append(row)
    return rows


CASES = [
    ("QQ 20x20 dense", 20, 20, 0.8, 0),
    ("QQ 60x60 sparse", 60, 60, 0.1, 0),
    ("QQ 120x120 sparse", 120, 120, 0.05, 0),
    ("GF(101) 60x60 dense", 60, 60, 0.7, 101),
    ("GF(101) 150x150 sparse", 150, 150, 0.05, 101),
]


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"default backend: {BACKEND}")
    print(f"{'case':28s} {'python (ms)':>12s} {'cython (ms)':>12s} {'speedup':>8s}")
    for name, nr, nc, dens, p in CASES:
        rows = random_rows(rng, nr, nc, dens, p)
        ref = _pycore.rref_rows(rows, nc, p)
        t_py = min(timeit.repeat(lambda: _pycore.rref_rows(rows, nc, p), number=1, repeat=args.repeat))
        if _ccore is None:
            print(f"{name:28s} {t_py * 1e3:12.2f} {'n/a':>12s} {'-':>8s}")
            continue
        if _ccore.rref_rows(rows, nc, p) != ref:
            raise SystemExit(f"backends disagree on {name}")
        t_c = min(timeit.repeat(lambda: _ccore.rref_rows(rows, nc, p), number=1, repeat=args.repeat))
        print(f"{name:28s} {t_py * 1e3:12.2f} {t_c * 1e3:12.2f} {t_py / t_c:8.2f}x")


if __name__ == "__main__":
    main()
