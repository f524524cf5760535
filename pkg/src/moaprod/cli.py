"""Command-line interface: benchmark sweeps, metric tables, one-off products."""

from __future__ import annotations

import argparse
import sys

from . import arrays, bench
from .kernel import plan_inner, plan_outer
from .ops import COMBINE_OPS, REDUCE_OPS, op_pair
from .parallel import execute_parallel


def _add_backend_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--backend", choices=("auto", "compiled", "python"),
                        default="auto",
                        help="kernel backend (auto = compiled when built)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moaprod",
        description="Generalized inner/outer array products and the "
                    "matrix-multiply benchmark harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bench = sub.add_parser(
        "bench", help="time a product over a sweep of power-of-two sizes")
    p_bench.add_argument("--mode", required=True, choices=bench.MODES)
    p_bench.add_argument("--threads", type=int, default=1,
                         help="worker count; also the result row count "
                              "unless --rows is given")
    p_bench.add_argument("--ell", type=int, default=128,
                         help="contraction length (columns of A, rows of B)")
    p_bench.add_argument("--n-min", type=int, default=1, metavar="P",
                         help="sweep starts at n = 2**P")
    p_bench.add_argument("--n-max", type=int, default=8, metavar="Q",
                         help="sweep ends at n = 2**Q")
    p_bench.add_argument("--repeats", type=int, default=3)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--out", required=True, help="raw CSV output path")
    p_bench.add_argument("--combine", default="multiply",
                         choices=sorted(COMBINE_OPS))
    p_bench.add_argument("--reduce", default="add", choices=sorted(REDUCE_OPS))
    p_bench.add_argument("--rows", type=int, default=None,
                         help="decouple the result row count from --threads")
    p_bench.add_argument("--keep-going", action="store_true",
                         help="exit 0 even if some sizes failed")
    _add_backend_flag(p_bench)

    p_metrics = sub.add_parser(
        "metrics", help="derive mean/total-time/ratio rows from raw CSVs")
    p_metrics.add_argument("--raw", required=True)
    p_metrics.add_argument("--baseline-raw", required=True,
                           help="raw CSV holding the single-thread runs")
    p_metrics.add_argument("--out", required=True)

    p_product = sub.add_parser(
        "product", help="run one product on array literal files")
    p_product.add_argument("--mode", required=True, choices=("inner", "outer"))
    p_product.add_argument("--left", required=True)
    p_product.add_argument("--right", required=True)
    p_product.add_argument("--combine", default="multiply",
                           choices=sorted(COMBINE_OPS))
    p_product.add_argument("--reduce", default="add",
                           choices=sorted(REDUCE_OPS))
    p_product.add_argument("--threads", type=int, default=1)
    p_product.add_argument("--out", default=None,
                           help="write the result literal here (default stdout)")
    _add_backend_flag(p_product)

    return parser


def _cmd_bench(args) -> int:
    if args.n_min < 0 or args.n_max < args.n_min:
        print(f"bad sweep bounds: n-min {args.n_min}, n-max {args.n_max}",
              file=sys.stderr)
        return 2
    config = bench.ExperimentConfig(
        mode=args.mode,
        workers=args.threads,
        ell=args.ell,
        n_list=[2 ** p for p in range(args.n_min, args.n_max + 1)],
        repeats=args.repeats,
        seed=args.seed,
        combine=args.combine,
        reduce=args.reduce,
        rows=args.rows,
        backend=args.backend,
    )
    result = bench.run_experiment(config)
    bench.emit_csv(args.out, result.records, kind="raw")
    print(f"{len(result.records)} records -> {args.out}")
    for failure in result.failures:
        print(f"failed: mode={failure.mode} n={failure.n}: {failure.error}",
              file=sys.stderr)
    if result.failures and not args.keep_going:
        return 1
    return 0


def _cmd_metrics(args) -> int:
    records = bench.read_records_csv(args.raw)
    baseline = bench.read_records_csv(args.baseline_raw)
    rows = bench.derive_metrics(records, baseline)
    bench.emit_csv(args.out, rows, kind="metrics")
    print(f"{len(rows)} metric rows -> {args.out}")
    return 0


def _cmd_product(args) -> int:
    a = arrays.load(args.left)
    b = arrays.load(args.right)
    ops = op_pair(args.combine, args.reduce)
    plan = plan_inner(a.shape, b.shape) if args.mode == "inner" \
        else plan_outer(a.shape, b.shape)
    out = execute_parallel(plan, a, b, ops, args.threads, backend=args.backend)
    text = arrays.dumps(out)
    if args.out is None:
        sys.stdout.write(text)
    else:
        arrays.dump(out, args.out)
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    if getattr(args, "backend", None) == "auto":
        args.backend = None
    if args.command == "bench":
        return _cmd_bench(args)
    if args.command == "metrics":
        return _cmd_metrics(args)
    return _cmd_product(args)


if __name__ == "__main__":
    sys.exit(main())
