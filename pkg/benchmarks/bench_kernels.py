"""Compare the compiled kernels with the pure-Python ones.

    python benchmarks/bench_kernels.py [--repeat N]

Prints timings for the Grassmann sign kernel and for sparse Gaussian-integer
elimination, plus the speedup. Exits 1 if the compiled module is missing.
"""

import argparse
import random
import sys
import timeit

from conformalk import _kernels_py as py

try:
    from conformalk import _kernels_c as cy
except ImportError:
    cy = None


def sign_workload(k):
    pairs = [(a, b) for a in range(256) for b in range(256)]

    def run():
        s = 0
        f = k.mono_mul_sign
        for a, b in pairs:
            s += f(a, b)
        return s
    return run


def echelon_workload(k, seed=7, nrows=120, ncols=80):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        r = {}
        for _ in range(6):
            v = (rng.randint(-4, 4), rng.randint(-4, 4))
            if v != (0, 0):
                r[rng.randrange(ncols)] = v
        rows.append(r)

    def run():
        return len(k.echelon(rows))
    return run


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled kernels not available; build with `python setup.py build_ext --inplace`")
        return 1
    for name, make in (("mono_mul_sign x65536", sign_workload),
                       ("echelon 120x80", echelon_workload)):
        assert make(py)() == make(cy)()
        tp = min(timeit.repeat(make(py), number=1, repeat=args.repeat))
        tc = min(timeit.repeat(make(cy), number=1, repeat=args.repeat))
        print(f"{name:24s} python {tp * 1e3:8.2f} ms  cython {tc * 1e3:8.2f} ms  speedup {tp / tc:5.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
