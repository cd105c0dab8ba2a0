"""Timing comparison of the compiled hot kernels against their pure
Python fallbacks.

Usage:  python3 benchmarks/bench_kernels.py [--repeat N]

The three kernels are the reduced theta series bundle (the basis of
every elliptic-function evaluation), the Eisenstein series pair that
produces the curve invariants, and the Carlson symmetric integral used
by the elliptic logarithm.
"""

import argparse
import cmath
import time

import numpy as np

from semiabel._kernels import (
    NUMBA_ENABLED,
    carlson_rf,
    carlson_rf_py,
    eisenstein_e4_e6,
    eisenstein_e4_e6_py,
    theta1_bundle,
    theta1_bundle_py,
)


def _time(fn, args_list, repeat):
    # one warm-up sweep so compilation is not measured
    for args in args_list:
        fn(*args)
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in args_list:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best / len(args_list)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=7)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    taus = [complex(rng.uniform(-0.45, 0.45), rng.uniform(0.3, 3.0)) for _ in range(64)]
    theta_args = [
        (complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)), tau) for tau in taus
    ]
    eis_args = [(tau,) for tau in taus]
    rf_args = [
        (
            complex(rng.uniform(0.5, 3.0), rng.uniform(-1.0, 1.0)),
            complex(rng.uniform(0.5, 3.0), rng.uniform(-1.0, 1.0)),
            complex(rng.uniform(0.5, 3.0), rng.uniform(-1.0, 1.0)),
        )
        for _ in range(64)
    ]

    cases = [
        ("theta1_bundle", theta1_bundle, theta1_bundle_py, theta_args),
        ("eisenstein_e4_e6", eisenstein_e4_e6, eisenstein_e4_e6_py, eis_args),
        ("carlson_rf", carlson_rf, carlson_rf_py, rf_args),
    ]

    print(f"compiled kernels active: {NUMBA_ENABLED}")
    print(f"{'kernel':<20}{'python (us)':>14}{'compiled (us)':>16}{'speedup':>10}")
    for name, fast, slow, call_args in cases:
        t_py = _time(slow, call_args, args.repeat) * 1e6
        if NUMBA_ENABLED:
            t_fast = _time(fast, call_args, args.repeat) * 1e6
            print(f"{name:<20}{t_py:>14.2f}{t_fast:>16.2f}{t_py / t_fast:>9.1f}x")
        else:
            print(f"{name:<20}{t_py:>14.2f}{'(disabled)':>16}{'-':>10}")


if __name__ == "__main__":
    main()
