"""Compare the compiled coefficient kernel against the pure-Python one.

Times the three workloads the library leans on: modular products, division
chains, and the orthogonal-word scan behind the brute-force dual checks.
Both backends are imported directly, so the RINGCODES_BACKEND variable is
irrelevant here.

Usage:
    python benchmarks/bench_kernel.py [--repeat N] [--seed S]
"""

import argparse
import random
import time

from ringcodes import _kernels_py

try:
    from ringcodes import _kernels_cy
except ImportError:
    _kernels_cy = None


def rand_poly(rng, deg, p):
    c = [rng.randrange(p) for _ in range(deg)]
    c.append(rng.randrange(1, p))
    return c


def bench_mulmod(kern, rng, p, n):
    f = rand_poly(rng, 12, p)
    pairs = [
        (rand_poly(rng, 11, p), rand_poly(rng, 11, p)) for _ in range(n)
    ]
    t0 = time.perf_counter()
    for a, b in pairs:
        kern.poly_mulmod(a, b, f, p)
    return time.perf_counter() - t0


def bench_divmod(kern, rng, p, n):
    b = rand_poly(rng, 12, p)
    tops = [rand_poly(rng, 24, p) for _ in range(n)]
    t0 = time.perf_counter()
    for a in tops:
        kern.poly_divmod(a, b, p)
    return time.perf_counter() - t0


def bench_scan(kern, rng, p, n):
    # three generators of a length-3 module over a degree-5 modulus:
    # the scan walks all p^15 words per call
    f = [0, 0, 1, 0, 0, 1]  # x^5 + x^2
    rows = [
        [[0, 1], [0, 1], []],
        [[], [0, 0, 1], [1]],
        [[], [], [1, 0, 0, 1]],
    ]
    t0 = time.perf_counter()
    for _ in range(n):
        kern.count_orthogonal(rows, 3, f, p)
    return time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="runs per cell")
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args()

    jobs = [
        ("mulmod deg<12 F2 x20000", bench_mulmod, 2, 20000),
        ("mulmod deg<12 F13 x20000", bench_mulmod, 13, 20000),
        ("divmod 24/12 F3 x20000", bench_divmod, 3, 20000),
        ("orthogonal scan 2^15 x3", bench_scan, 2, 3),
    ]
    backends = [("python", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cython", _kernels_cy))
    else:
        print("compiled backend not importable; timing pure Python only")

    width = max(len(name) for name, *_ in jobs)
    header = f"{'workload'.ljust(width)}  " + "".join(
        f"{n:>10}" for n, _ in backends
    )
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, fn, p, n in jobs:
        cells = []
        for _, kern in backends:
            best = min(
                fn(kern, random.Random(args.seed), p, n)
                for _ in range(args.repeat)
            )
            cells.append(best)
        line = f"{name.ljust(width)}  " + "".join(
            f"{c * 1000:>8.1f}ms" for c in cells
        )
        if len(cells) == 2:
            line += f"{cells[0] / cells[1]:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
