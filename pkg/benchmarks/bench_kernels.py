"""Timing comparison of the compiled and pure-Python kernel backends.

Runs both backends on the same sweep workload (both atom sequences over a
time grid) and reports best-of-N wall times plus the ensemble sizes, so the
speedup of the compiled extension is visible on a realistic thermal case.
"""

import argparse
import time

import numpy as np

from micromaser import kernels
from micromaser.fields import FieldSpec, weights
from micromaser.kernels import _ref


def _workload(field, steps):
    pairs = weights(field)
    ns = np.array([n for n, _ in pairs], dtype=np.int64)
    ws = np.array([p for _, p in pairs], dtype=np.float64)
    ts = np.linspace(0.0, 10.0, steps)
    return ns, ws, ts


def _best_time(module, ns, ws, ts, chi, r, stark, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        module.eg_entries(ns, ws, ts, chi, r, stark)
        module.ee_entries(ns, ws, ts, chi, r, stark)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--field", default="thermal:2.0", help="fock:<m> or thermal:<nbar>")
    parser.add_argument("--steps", type=int, default=1000, help="time grid points")
    parser.add_argument("--chi", type=float, default=0.5)
    parser.add_argument("--r", type=float, default=0.5)
    parser.add_argument("--stark", choices=("on", "off"), default="on")
    parser.add_argument("--repeats", type=int, default=7, help="take the best of this many runs")
    args = parser.parse_args(argv)

    field = FieldSpec.parse(args.field)
    ns, ws, ts = _workload(field, args.steps)
    stark = args.stark == "on"
    print(
        f"workload: {field.label()} ({ns.size} photon levels) x {args.steps} times, "
        f"chi={args.chi:g} r={args.r:g} stark={args.stark}"
    )

    ref_time = _best_time(_ref, ns, ws, ts, args.chi, args.r, stark, args.repeats)
    print(f"python   backend: {ref_time * 1e3:8.3f} ms")

    try:
        from micromaser.kernels import _fast
    except ImportError:
        print("compiled backend: not built (install compiles it when a C toolchain is present)")
        return 0

    fast_time = _best_time(_fast, ns, ws, ts, args.chi, args.r, stark, args.repeats)
    print(f"compiled backend: {fast_time * 1e3:8.3f} ms")
    print(f"speedup: {ref_time / fast_time:.2f}x (active import: {kernels.backend_name()})")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
