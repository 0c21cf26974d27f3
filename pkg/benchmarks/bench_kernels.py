"""Compare the compiled and pure-Python jet kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--number 2000]

Prints microseconds per call for mul, recip and compose at several orders,
then the end-to-end time of a composite integration with each backend.
"""

import argparse
import importlib
import random
import timeit

import jetquad._kernels as kernels
from jetquad import _pykernels, elementary as el
from jetquad.autoint import integrate_composite, make_plan


def load_backends():
    backends = {"python": _pykernels}
    try:
        backends["cython"] = importlib.import_module("jetquad._ckernels")
    except ImportError:
        pass
    return backends


def best_us(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number * 1e6


def bench_kernels(backends, orders, repeat, number):
    rng = random.Random(0)
    rows = []
    for n in orders:
        u = tuple(rng.uniform(0.5, 2.0) for _ in range(n + 1))
        v = tuple(rng.uniform(-1.0, 1.0) for _ in range(n + 1))
        d = tuple(rng.uniform(-1.0, 1.0) for _ in range(n + 1))
        for op, args in (("mul", (u, v)), ("recip", (u,)), ("compose", (d, u))):
            times = {}
            for name, mod in backends.items():
                f = getattr(mod, op)
                times[name] = best_us(lambda: f(*args), repeat, number)
            rows.append((op, n, times))
    return rows


def bench_integrate(backends, repeat):
    plan = make_plan(0.0, 2.0, 64, "mid", 10)

    def f(u):
        return el.exp(u * u)

    out = {}
    saved = (kernels.mul, kernels.recip, kernels.compose)
    try:
        for name, mod in backends.items():
            kernels.mul, kernels.recip, kernels.compose = mod.mul, mod.recip, mod.compose
            out[name] = min(timeit.repeat(lambda: integrate_composite(f, plan), repeat=repeat, number=1)) * 1e3
    finally:
        kernels.mul, kernels.recip, kernels.compose = saved
    return out


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--number", type=int, default=2000)
    p.add_argument("--orders", default="5,10,16")
    args = p.parse_args(argv)

    backends = load_backends()
    names = sorted(backends)
    if "cython" not in backends:
        print("compiled kernels not built; timing the Python fallback only")
    orders = [int(t) for t in args.orders.split(",")]

    header = f"{'op':<8} {'n':>3}  " + "  ".join(f"{n + ' us':>11}" for n in names)
    if len(names) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for op, n, times in bench_kernels(backends, orders, args.repeat, args.number):
        line = f"{op:<8} {n:>3}  " + "  ".join(f"{times[k]:>11.3f}" for k in names)
        if len(names) == 2:
            line += f"  {times['python'] / times['cython']:>7.1f}x"
        print(line)

    print()
    ms = bench_integrate(backends, args.repeat)
    print("integrate exp(x^2) on [0, 2], 64 subintervals, order 10:")
    for k in names:
        print(f"  {k:<7} {ms[k]:8.2f} ms")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
