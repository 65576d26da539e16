"""Compiled versus numpy kernels on full-field spectra and exponent scans.

    python benchmarks/bench_kernels.py [--repeat 3] [--scan 200]
"""

import argparse
import timeit

import numpy as np

from diffspec import kernels
from diffspec.field import build_field

FIELDS = [(7, 3), (3, 9), (5, 7), (7, 7)]


def histogram(mod, F, d):
    out = np.zeros(F.order + 1, dtype=np.int64)
    mod.derivative_log_counts(F.zech, d % F.order, 0, F.order, out)
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--scan", type=int, default=200, help="exponents per scan timing")
    args = ap.parse_args()

    backends = {name: kernels.load_backend(name) for name in kernels.available_backends()}
    if len(backends) < 2:
        print("compiled extension not built; only the numpy backend is available")
    print(f"{'field':>10} {'q':>8} {'kernel':>10} " + " ".join(f"{b:>10}" for b in backends)
          + "   speedup")
    for p, n in FIELDS:
        F = build_field(p, n)
        d = (p**2 + 1) // 2
        ds = np.arange(2, 2 + min(args.scan, F.q - 3)) % F.order
        # every backend must agree before its timing means anything
        ref = [histogram(m, F, d) for m in backends.values()]
        assert all(np.array_equal(r, ref[0]) for r in ref)
        cases = {
            "histogram": lambda m: histogram(m, F, d),
            "scan": lambda m: m.exponent_deltas(F.zech, ds),
            "scan<=4": lambda m: m.exponent_deltas(F.zech, ds, 4),
        }
        for label, fn in cases.items():
            times = {name: min(timeit.repeat(lambda: fn(m), number=1, repeat=args.repeat))
                     for name, m in backends.items()}
            speed = times["python"] / times["cython"] if "cython" in times else 1.0
            print(f"{f'F_{p}^{n}':>10} {F.q:>8} {label:>10} "
                  + " ".join(f"{t * 1e3:>8.1f}ms" for t in times.values()) + f"   {speed:6.1f}x")


if __name__ == "__main__":
    main()
