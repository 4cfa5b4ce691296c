"""Time the sweep kernels: numba against numpy (and plain Python on small sizes).

    python benchmarks/bench_kernels.py [--agents 40] [--issues 10 14 16] [--repeat 5]

Each row sweeps every subset of the issue universe for one random table.
Outputs are checked for equality before timings are reported.
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

import numpy as np

from triconflict import SituationTable, kernels


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--agents", type=int, default=40)
    parser.add_argument("--issues", type=int, nargs="+", default=[10, 14, 16])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--python-limit", type=int, default=12, help="skip the pure-Python path above this many issues")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not importable; nothing to compare")

    rng = np.random.default_rng(args.seed)
    half = Fraction(1, 2)
    print(f"{'kernel':<6} {'issues':>6} {'subjects':>9} {'numba s':>10} {'numpy s':>10} {'python s':>10} {'numpy/numba':>12}")
    for m in args.issues:
        t = SituationTable.from_matrix(rng.integers(-1, 2, size=(args.agents, m)))
        plus, minus = t.f_plus_masks, t.f_minus_masks
        runs = {
            "smz": {impl: (lambda impl=impl: kernels.smz_sweep(plus, minus, m, impl=impl)) for impl in ("numba", "numpy", "python")},
            "fqw": {impl: (lambda impl=impl: kernels.fqw_sweep(plus, minus, m, half, half, impl=impl))
                    for impl in ("numba", "numpy", "python")},
        }
        for name, impls in runs.items():
            impls["numba"]()  # compile outside the timed region
            a, b = impls["numba"](), impls["numpy"]()
            assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1]), f"{name} backends disagree"
            t_nb = best_of(impls["numba"], args.repeat)
            t_np = best_of(impls["numpy"], args.repeat)
            t_py = best_of(impls["python"], 1) if m <= args.python_limit else float("nan")
            print(f"{name:<6} {m:>6} {1 << m:>9} {t_nb:>10.4f} {t_np:>10.4f} {t_py:>10.4f} {t_np / t_nb:>12.1f}")


if __name__ == "__main__":
    main()
