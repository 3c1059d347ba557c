#!/usr/bin/env python3
"""Benchmark the pure-Python kernels against the compiled extension.

Run after building the extension in place::

    python setup.py build_ext --inplace
    python benchmarks/bench_kernels.py
"""

import time

from besselsums.backend import BACKEND, kernel_modules

REPEATS = 5


def _best(fn, *args):
    best = float("inf")
    for _ in range(REPEATS):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_recip_gamma(mod, n=20000):
    def run():
        rg = mod.recip_gamma
        a = -30.0
        step = 60.0 / n
        acc = 0.0
        for _ in range(n):
            acc += rg(a)
            a += step
        return acc

    return _best(run)


def bench_bessel(mod, n=4000):
    def run():
        bj = mod.bessel_j_series
        acc = 0.0
        for i in range(n):
            nu = (i % 40) - 20.0
            x = 0.5 + (i % 17) * 0.5
            acc += bj(nu, x, 1e-14, 1e-12, 400, 3)[0]
        return acc

    return _best(run)


def bench_wright(mod, n=4000):
    def run():
        w = mod.wright_series
        acc = 0.0
        for i in range(n):
            acc += w(1.0 + (i % 5), 0.5, 0.1 + (i % 9) * 0.3, 1e-14, 1e-12, 400, 3)[0]
        return acc

    return _best(run)


def main():
    mods = kernel_modules()
    print(f"selected backend: {BACKEND}")
    if "compiled" not in mods:
        print("compiled extension not built; benchmarking pure-python only")
    benches = [
        ("recip_gamma x20000", bench_recip_gamma),
        ("bessel_j   x4000", bench_bessel),
        ("wright     x4000", bench_wright),
    ]
    for label, bench in benches:
        times = {name: bench(mod) for name, mod in mods.items()}
        line = f"{label}:  " + "  ".join(f"{name} {t * 1e3:8.2f} ms" for name, t in times.items())
        if "compiled" in times and "pure-python" in times:
            line += f"  speedup {times['pure-python'] / times['compiled']:5.1f}x"
        print(line)


if __name__ == "__main__":
    main()
