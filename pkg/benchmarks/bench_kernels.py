"""Compare the numba and numpy sampling kernels.

    python benchmarks/bench_kernels.py [npts] [repeats]

Times ``horner_grid`` and ``local_maxima`` on both paths, after one warm-up
call so numba compilation is not counted, and checks the outputs agree.
"""

import sys
import timeit

import numpy as np

from polycert import _kernels


def bench(fn, args, repeats):
    fn(*args)
    return min(timeit.repeat(lambda: fn(*args), number=1, repeat=repeats))


def main(npts=1_000_000, repeats=5):
    npts, repeats = int(npts), int(repeats)
    if not _kernels.USE_NUMBA:
        print("numba path disabled or not installed; nothing to compare")
        return 1
    rng = np.random.default_rng(0)
    xs = np.linspace(-3.0, 3.0, npts)
    rows = []
    for deg in (3, 8, 32):
        c = rng.normal(size=deg + 1)
        a = bench(_kernels.horner_grid_numpy, (c, xs), repeats)
        b = bench(_kernels.horner_grid_numba, (c, xs), repeats)
        same = np.array_equal(_kernels.horner_grid_numpy(c, xs), _kernels.horner_grid_numba(c, xs))
        rows.append((f"horner_grid deg {deg}", a, b, same))
    ys = np.abs(np.sin(40 * xs) * _kernels.horner_grid_numpy(rng.normal(size=6), xs))
    a = bench(_kernels.local_maxima_numpy, (ys, 16), repeats)
    b = bench(_kernels.local_maxima_numba, (ys, 16), repeats)
    same = np.array_equal(_kernels.local_maxima_numpy(ys, 16), _kernels.local_maxima_numba(ys, 16))
    rows.append(("local_maxima k 16", a, b, same))
    print(f"{npts} points, best of {repeats}")
    print(f"{'kernel':<22}{'numpy ms':>10}{'numba ms':>10}{'speedup':>9}  equal")
    for name, a, b, same in rows:
        print(f"{name:<22}{a * 1e3:>10.2f}{b * 1e3:>10.2f}{a / b:>9.2f}  {same}")
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
