"""Benchmark harness: timed sweeps, derived metrics, CSV emission.

One experiment times a product C = A*B where C is rows x n, A is
rows x ell, B is ell x n; by default rows equals the worker count, so the
problem grows with the number of threads and the wall time of a run reads
as "time per thread".  Each size is repeated and averaged.  Derived
metrics rescale the size axis by the worker count (total time) and divide
by the matching single-worker mean (ratio; above the worker count means
multiple workers cost more than running the jobs back to back).
"""

from __future__ import annotations

import csv
import statistics
import time
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .arrays import MoaArray
from .gemm import GemmParams, from_colmajor, run_colmajor, to_colmajor
from .kernel import plan_inner, plan_outer
from .ops import op_pair
from .parallel import execute_parallel

MODES = ("moa-inner", "moa-outer", "gemm-baseline")

RAW_FIELDS = ("mode", "threads", "ell", "n", "repeat", "seconds", "checksum")
METRIC_FIELDS = ("mode", "threads", "n", "mean_seconds", "total_x", "ratio",
                 "no_net_benefit")


@dataclass(frozen=True)
class ExperimentConfig:
    mode: str
    workers: int = 1
    ell: int = 128
    n_list: Sequence[int] = (2, 4, 8, 16, 32, 64, 128, 256)
    repeats: int = 3
    seed: int = 0
    combine: str = "multiply"
    reduce: str = "add"
    rows: int | None = None  # result rows; defaults to the worker count
    backend: str | None = None

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")
        if self.ell < 1:
            raise ValueError(f"ell must be >= 1, got {self.ell}")
        if self.repeats < 1:
            raise ValueError(f"repeats must be >= 1, got {self.repeats}")
        if self.mode == "gemm-baseline" and (self.combine, self.reduce) != (
                "multiply", "add"):
            raise ValueError("gemm-baseline computes alpha*A*B + beta*C only; "
                             "op selection applies to the moa modes")


@dataclass(frozen=True)
class TimingRecord:
    mode: str
    threads: int
    ell: int
    n: int
    repeat: int
    seconds: float
    checksum: float


@dataclass(frozen=True)
class SizeFailure:
    mode: str
    threads: int
    ell: int
    n: int
    error: str


@dataclass(frozen=True)
class MetricRow:
    mode: str
    threads: int
    n: int
    mean_seconds: float
    total_x: int
    ratio: float | None
    no_net_benefit: bool | None


@dataclass
class ExperimentResult:
    records: list[TimingRecord] = field(default_factory=list)
    failures: list[SizeFailure] = field(default_factory=list)


def operand_pair(seed: int, rows: int, ell: int, n: int) -> tuple[MoaArray, MoaArray]:
    """A (rows x ell) and B (ell x n), uniform in [0, 1).

    Values depend only on (seed, rows, ell, n), so every mode sees the
    same operands and their result checksums are comparable.
    """
    rng = np.random.default_rng([seed, rows, ell, n])
    a = rng.random((rows, ell))
    b = rng.random((ell, n))
    return (MoaArray._wrap((rows, ell), a.ravel()),
            MoaArray._wrap((ell, n), b.ravel()))


def _checksum(arr: MoaArray) -> float:
    return float(np.sum(arr.data))


def _time_moa(config: ExperimentConfig, n: int, rows: int,
              result: ExperimentResult) -> None:
    a, b = operand_pair(config.seed, rows, config.ell, n)
    ops = op_pair(config.combine, config.reduce)
    if config.mode == "moa-inner":
        plan = plan_inner(a.shape, b.shape)
    else:
        plan = plan_outer(a.shape, b.shape)
    for r in range(config.repeats):
        t0 = time.perf_counter()
        out = execute_parallel(plan, a, b, ops, config.workers,
                               backend=config.backend)
        dt = time.perf_counter() - t0
        result.records.append(TimingRecord(config.mode, config.workers,
                                           config.ell, n, r, dt,
                                           _checksum(out)))


def _time_gemm(config: ExperimentConfig, n: int, rows: int,
               result: ExperimentResult) -> None:
    a, b = operand_pair(config.seed, rows, config.ell, n)
    params = GemmParams(alpha=1.0, beta=0.0, m=rows, n=n, k=config.ell)
    a_cm = to_colmajor(a, rows, config.ell)
    b_cm = to_colmajor(b, config.ell, n)
    c_cm = np.zeros(rows * n, dtype=np.float64)
    for r in range(config.repeats):
        t0 = time.perf_counter()
        run_colmajor(params, a_cm, b_cm, c_cm, config.workers,
                     backend=config.backend)
        dt = time.perf_counter() - t0
        out = from_colmajor(c_cm, rows, n)
        result.records.append(TimingRecord(config.mode, config.workers,
                                           config.ell, n, r, dt,
                                           _checksum(out)))


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Time the configured product over every n in the sweep.

    Only the product execution is timed; operand construction, layout
    conversion, and checksumming happen outside the clock.  A size that
    exhausts memory is recorded as a failure and the sweep continues.
    """
    result = ExperimentResult()
    rows = config.rows if config.rows is not None else config.workers
    if rows < 1:
        raise ValueError(f"rows must be >= 1, got {rows}")
    for n in config.n_list:
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        try:
            if config.mode == "gemm-baseline":
                _time_gemm(config, n, rows, result)
            else:
                _time_moa(config, n, rows, result)
        except (MemoryError, OverflowError) as exc:
            result.failures.append(SizeFailure(
                config.mode, config.workers, config.ell, n,
                f"{type(exc).__name__}: {exc}"))
    return result


def derive_metrics(records: Iterable[TimingRecord],
                   baseline_records: Iterable[TimingRecord]) -> list[MetricRow]:
    """Mean over repeats plus total-time and ratio-to-one-worker columns.

    The ratio for (mode, threads, n) divides by the single-worker mean at
    the same (mode, n) taken from `baseline_records`; rows without a
    matching single-worker run keep an empty ratio and carry a warning.
    """
    groups: dict[tuple[str, int, int], list[float]] = {}
    for rec in records:
        groups.setdefault((rec.mode, rec.threads, rec.n), []).append(rec.seconds)
    base: dict[tuple[str, int], list[float]] = {}
    for rec in baseline_records:
        if rec.threads == 1:
            base.setdefault((rec.mode, rec.n), []).append(rec.seconds)
    rows = []
    for (mode, threads, n) in sorted(groups):
        mean = statistics.fmean(groups[(mode, threads, n)])
        base_secs = base.get((mode, n))
        if base_secs:
            ratio = mean / statistics.fmean(base_secs)
            no_benefit = ratio > threads
        else:
            warnings.warn(f"no single-worker baseline for mode={mode} n={n}; "
                          f"ratio omitted")
            ratio = None
            no_benefit = None
        rows.append(MetricRow(mode, threads, n, mean, n * threads, ratio,
                              no_benefit))
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return repr(value) if isinstance(value, float) else str(value)


def emit_csv(path, rows: Sequence[TimingRecord | MetricRow],
             kind: str | None = None) -> None:
    """Write records or metric rows as CSV in deterministic order.

    `kind` ("raw" or "metrics") picks the header when `rows` is empty;
    otherwise it is inferred.  Floats are printed in shortest round-trip
    form, so equal checksums compare equal as text.
    """
    if kind is None:
        if not rows:
            kind = "raw"
        else:
            kind = "raw" if isinstance(rows[0], TimingRecord) else "metrics"
    if kind == "raw":
        fields = RAW_FIELDS
        ordered = sorted(rows, key=lambda r: (r.mode, r.threads, r.n, r.repeat))
    elif kind == "metrics":
        fields = METRIC_FIELDS
        ordered = sorted(rows, key=lambda r: (r.mode, r.threads, r.n))
    else:
        raise ValueError(f"unknown csv kind {kind!r}")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(fields)
        for row in ordered:
            writer.writerow([_cell(getattr(row, f)) for f in fields])


def read_records_csv(path) -> list[TimingRecord]:
    """Parse a raw CSV written by emit_csv back into timing records."""
    records = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            records.append(TimingRecord(
                mode=row["mode"],
                threads=int(row["threads"]),
                ell=int(row["ell"]),
                n=int(row["n"]),
                repeat=int(row["repeat"]),
                seconds=float(row["seconds"]),
                checksum=float(row["checksum"]),
            ))
    return records
