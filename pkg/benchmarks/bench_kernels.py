"""Compare the compiled and numpy kernel backends on the default grid.

    python3 benchmarks/bench_kernels.py [--sizes 100,1000,10000] [--repeat 3]

For every kernel and sample size, prints the best-of-``repeat`` wall time per
backend, the speed-up and the largest absolute difference between outputs.
"""

import argparse
import math
import time

import numpy as np

from repdeconv.kernels import get_backend
from repdeconv.risk import DEFAULT_STEP, DEFAULT_U_MAX
from repdeconv.scenarios import TABLE_41
from repdeconv.testkit import sample_fixture


def best_time(fn, repeat):
    best, out = math.inf, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def max_diff(a, b):
    if isinstance(a, tuple):
        return max(max_diff(x, y) for x, y in zip(a, b))
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def cases(n):
    sample = sample_fixture(TABLE_41[0], n)
    m = int(round(DEFAULT_U_MAX / DEFAULT_STEP)) + 1
    y1, y2 = sample.y1.copy(), sample.y2.copy()
    u = DEFAULT_STEP * np.arange(m)
    ref = np.exp(-0.5 * (u / math.sqrt(n)) ** 2)
    s0, s1 = get_backend("python").phasor_sums(y1, y2, DEFAULT_STEP, m)
    partial, marginal = 1j * s1 / n, s0 / n
    marginal[0] = 1.0
    n_cv = (n // 5) * 5
    return {
        "phasor_sums": lambda k: k.phasor_sums(y1, y2, DEFAULT_STEP, m),
        "log_derivative_integral": lambda k: k.log_derivative_integral(
            partial, marginal, 1 / math.sqrt(n), DEFAULT_STEP, True)[:2],
        "cv_aggregates": lambda k: k.cv_aggregates(y1[:n_cv], y2[:n_cv], DEFAULT_STEP, m, ref, 5),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="100,1000,10000")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-python-cv-above", type=int, default=10000,
                    help="numpy cross-validation is slow; skip it above this n")
    args = ap.parse_args(argv)

    cy, py = get_backend("cython"), get_backend("python")
    print(f"{'kernel':<26}{'n':>7}{'cython s':>12}{'python s':>12}{'speed-up':>10}{'max |diff|':>13}")
    for n in (int(s) for s in args.sizes.split(",")):
        for name, fn in cases(n).items():
            tc, oc = best_time(lambda: fn(cy), args.repeat)
            if name == "cv_aggregates" and n > args.skip_python_cv_above:
                print(f"{name:<26}{n:>7}{tc:>12.4f}{'skipped':>12}")
                continue
            tp, op = best_time(lambda: fn(py), 1 if name == "cv_aggregates" else args.repeat)
            print(f"{name:<26}{n:>7}{tc:>12.4f}{tp:>12.4f}{tp / tc:>9.1f}x{max_diff(oc, op):>13.2e}")


if __name__ == "__main__":
    main()
