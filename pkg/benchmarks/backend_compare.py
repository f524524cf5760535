#!/usr/bin/env python3
"""Compare the compiled and pure-Python backends on the matrix sweep.

Times the product kernel and the GEMM baseline on both backends over
power-of-two column counts and prints a speedup table.  The compiled
extension must be built (pip install -e . --no-build-isolation).

Usage:
    python benchmarks/backend_compare.py [--threads 1] [--ell 128]
                                         [--n-min 1] [--n-max 7]
                                         [--repeats 3] [--seed 0]
"""

import argparse
import statistics
import sys

from moaprod import HAVE_COMPILED
from moaprod.bench import ExperimentConfig, run_experiment


def sweep(mode, backend, args):
    config = ExperimentConfig(
        mode=mode,
        workers=args.threads,
        ell=args.ell,
        n_list=[2 ** p for p in range(args.n_min, args.n_max + 1)],
        repeats=args.repeats,
        seed=args.seed,
        backend=backend,
    )
    result = run_experiment(config)
    means = {}
    for rec in result.records:
        means.setdefault(rec.n, []).append(rec.seconds)
    return {n: statistics.fmean(secs) for n, secs in means.items()}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--ell", type=int, default=128)
    parser.add_argument("--n-min", type=int, default=1)
    parser.add_argument("--n-max", type=int, default=7)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if not HAVE_COMPILED:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    for mode in ("moa-inner", "gemm-baseline"):
        compiled = sweep(mode, "compiled", args)
        pure = sweep(mode, "python", args)
        print(f"\n{mode} (threads={args.threads}, ell={args.ell}, "
              f"mean of {args.repeats})")
        print(f"{'n':>6}  {'compiled [s]':>14}  {'python [s]':>14}  {'speedup':>8}")
        for n in sorted(compiled):
            ratio = pure[n] / compiled[n] if compiled[n] > 0 else float("inf")
            print(f"{n:>6}  {compiled[n]:>14.6f}  {pure[n]:>14.6f}  "
                  f"{ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
