#!/usr/bin/env python3
"""Benchmark the compiled scan kernel against the pure-numpy fallback.

The workload is the hot loop of every sweep: the lowest eigenvalue of all
sector blocks k = 0 .. k_max at fixed couplings. Both backends implement
the same bisection, so outputs are checked for exact agreement.
"""

import timeit

import numpy as np

from tclab import _scan_py
from tclab.model import ModelParams

try:
    from tclab import _scan
except ImportError:
    _scan = None

CASES = [
    # (label, eta, g, M, k_max)
    ("post-transition scan   M=8,  g=1.5", 10.0, 1.5, 8, 180),
    ("strong-coupling scan   M=8,  g=5.0", 10.0, 5.0, 8, 1000),
    ("largest system         M=9,  g=5.0", 10.0, 5.0, 9, 1125),
    ("small window           M=2,  g=1.1", 10.0, 1.1, 2, 30),
]


def time_call(fn, min_repeat=5):
    timer = timeit.Timer(fn)
    number, _ = timer.autorange()
    return min(timer.repeat(min_repeat, number)) / number


def main():
    if _scan is None:
        print("compiled kernel not built; showing pure-numpy timings only\n")
    header = f"{'case':<38} {'pure (ms)':>10}"
    if _scan is not None:
        header += f" {'compiled (ms)':>14} {'speedup':>8} {'identical':>10}"
    print(header)
    print("-" * len(header))
    for label, eta, g, M, k_max in CASES:
        p = ModelParams.from_dimensionless(1.0, eta, g, M)
        args = (p.omega_c, p.delta, p.lam, M, k_max)
        t_pure = time_call(lambda: _scan_py.scan_lowest(*args))
        line = f"{label:<38} {t_pure * 1e3:>10.3f}"
        if _scan is not None:
            t_comp = time_call(lambda: _scan.scan_lowest(*args))
            same = np.array_equal(_scan.scan_lowest(*args), _scan_py.scan_lowest(*args))
            line += f" {t_comp * 1e3:>14.3f} {t_pure / t_comp:>7.1f}x {str(same):>10}"
        print(line)


if __name__ == "__main__":
    main()
