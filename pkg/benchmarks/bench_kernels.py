"""Time the compiled and pure-Python kernels on the workloads that dominate runtime.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import time

from wreathgrowth import kernels
from wreathgrowth.growth import (
    GroupSpec,
    Kind,
    gamma_alt_recurrence,
    gamma_sym_recurrence,
    growth_series,
    no_coefficient,
)

WORKLOADS = {
    "expand SYM 10, order 500": lambda: growth_series(GroupSpec(Kind.SYM, 10), 500),
    "power ALT 5, order 500": lambda: growth_series(GroupSpec(Kind.ALT, 5), 500),
    "recurrence SYM 12, order 400": lambda: gamma_sym_recurrence(12, 400),
    "recurrence ALT 8, order 200": lambda: gamma_alt_recurrence(8, 200),
    "hook sum r=-6, n=30": lambda: no_coefficient(-6, 30),
}


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available()
    original = kernels.BACKEND
    print(f"{'workload':32}" + "".join(f"{b:>12}" for b in backends) + "     speedup")
    try:
        for name, fn in WORKLOADS.items():
            times = {}
            for b in backends:
                kernels.use(b)
                times[b] = best_of(fn, args.repeat)
            row = f"{name:32}" + "".join(f"{times[b]:11.3f}s" for b in backends)
            if "compiled" in times:
                row += f"  {times['python'] / times['compiled']:9.2f}x"
            print(row)
    finally:
        kernels.use(original)


if __name__ == "__main__":
    main()
