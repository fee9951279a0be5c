"""Compare the compiled and pure-Python vertex kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Times the raw kernels on the halfplane systems of every tuple in {0..3}^6,
then one end-to-end region sweep per backend (each in a fresh interpreter,
since the backend is chosen at import).
"""

import argparse
import itertools
import os
import subprocess
import sys
import time

from ldic import _pykernels
from ldic.converse import converse_bounds
from ldic.model import validate

try:
    from ldic import _ckernels
except ImportError:
    _ckernels = None


def systems(hi):
    out = []
    for tup in itertools.product(range(hi + 1), repeat=6):
        rows = {h.primitive() for h in converse_bounds(validate(tup)).halfplanes()}
        rows |= {(-1, 0, 0), (0, -1, 0)}
        out.append(sorted(rows))
    return out


def time_kernel(mod, rows_list, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for rows in rows_list:
            pts = mod.polygon_vertices(rows)
            mod.tight_counts(rows, pts)
        best = min(best, time.perf_counter() - t0)
    return best


SWEEP = """
import itertools, time
from ldic.kernels import BACKEND
from ldic.converse import capacity_region
from ldic.model import validate
t0 = time.perf_counter()
for tup in itertools.product(range(4), repeat=6):
    capacity_region(validate(tup))
print(BACKEND, time.perf_counter() - t0)
"""


def end_to_end(pure):
    env = dict(os.environ, LDIC_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True,
                         text=True, check=True).stdout.split()
    return out[0], float(out[1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rows_list = systems(3)
    print(f"{len(rows_list)} halfplane systems")
    py = time_kernel(_pykernels, rows_list, args.repeat)
    print(f"kernel python  {py:8.3f} s")
    if _ckernels is None:
        print("kernel cython  (extension not built)")
    else:
        cy = time_kernel(_ckernels, rows_list, args.repeat)
        print(f"kernel cython  {cy:8.3f} s   speedup x{py / cy:.1f}")
    for pure in (True, False):
        name, t = end_to_end(pure)
        print(f"regions {name:<7}{t:8.3f} s")


if __name__ == "__main__":
    main()
