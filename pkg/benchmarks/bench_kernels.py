"""Timing comparison of the orbit kernel backends.

Builds the multiplication-by-alpha matrix for a few fields and walks the
full orbit with both the compiled extension and the numpy fallback.  Run
as `python benchmarks/bench_kernels.py`.
"""

import argparse
import time

from irrcyclic import fields, kernels

SIZES = [(2, 16), (2, 20), (2, 22), (3, 13), (5, 9), (7, 7), (13, 5)]


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["python"]
    if kernels.BACKEND == "compiled":
        backends.insert(0, "compiled")
    else:
        print("compiled extension not available; timing the fallback only")

    print(f"{'field':>12} {'r':>9}", *(f"{b:>10}" for b in backends), f"{'ratio':>7}")
    for p, d in SIZES:
        tower = fields.build_tower(p, 1, d)
        core = tower.core
        r = core.r

        def run(backend):
            kernels.alpha_orbit(p, d, core.mult_matrix, r - 1, backend=backend)

        timings = [best_of(lambda b=b: run(b), args.repeat) for b in backends]
        ratio = timings[-1] / timings[0] if len(timings) > 1 else 1.0
        print(
            f"{f'GF({p}^{d})':>12} {r:>9}",
            *(f"{t * 1e3:>8.1f}ms" for t in timings),
            f"{ratio:>6.1f}x",
        )


if __name__ == "__main__":
    main()
