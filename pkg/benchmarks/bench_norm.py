#!/usr/bin/env python3
"""Benchmark the compiled power-iteration kernel against the NumPy one.

Runs the same restarts on the same matrices through every available
backend, checks that the estimates agree to 1e-9, and prints a timing
table. Usage: python benchmarks/bench_norm.py [--repeats N]
"""

import argparse
import time

import numpy as np

from leavitt_lp.kernels import available_backends


def make_cases(rng):
    cases = []
    for n in (4, 8, 16, 32, 64):
        A = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        cases.append((f"random {n}x{n}", A))
    # structured cases: a signed permutation and a rank-one column matrix
    P = np.zeros((8, 8), dtype=complex)
    for j, (k, s) in enumerate(zip(np.random.default_rng(0).permutation(8), [1, -1] * 4)):
        P[j, k] = s
    cases.append(("signed permutation 8x8", P))
    S = np.zeros((16, 16), dtype=complex)
    S[:, 0] = rng.standard_normal(16) + 1j * rng.standard_normal(16)
    cases.append(("rank-one 16x16", S))
    return cases


def run(repeats: int) -> None:
    rng = np.random.default_rng(12345)
    backends = available_backends()
    print(f"backends: {', '.join(backends)}")
    cases = make_cases(rng)
    p = 2.5
    starts = {
        name: [
            rng.standard_normal(A.shape[1]) + 1j * rng.standard_normal(A.shape[1])
            for _ in range(16)
        ]
        for name, A in cases
    }

    header = f"{'case':>24} | " + " | ".join(f"{b:>12}" for b in backends)
    print(header)
    print("-" * len(header))
    reference = {}
    timings = {b: 0.0 for b in backends}
    for name, A in cases:
        row = [f"{name:>24}"]
        for backend, fn in backends.items():
            best = 0.0
            t0 = time.perf_counter()
            for _ in range(repeats):
                for x0 in starts[name]:
                    est, _, _, _ = fn(A, p, x0, 10_000, 1e-10)
                    best = max(best, est)
            dt = (time.perf_counter() - t0) / repeats
            timings[backend] += dt
            row.append(f"{dt * 1e3:>10.2f}ms")
            if name in reference:
                assert abs(best - reference[name]) <= 1e-9 * max(1.0, reference[name]), (
                    f"backend disagreement on {name}: {best} vs {reference[name]}"
                )
            else:
                reference[name] = best
        print(" | ".join(row))

    print("-" * len(header))
    total = " | ".join(f"{timings[b] * 1e3:>10.2f}ms" for b in backends)
    print(f"{'total':>24} | {total}")
    if len(timings) == 2:
        fast, slow = sorted(timings.values())
        if fast > 0:
            print(f"speedup: {slow / fast:.1f}x")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeats", type=int, default=3)
    run(ap.parse_args().repeats)
