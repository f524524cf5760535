"""Fork-join execution of a kernel plan over round-robin row partitions.

Worker k owns result rows {i : i mod workers == k} and performs each owned
row's full accumulation in the sequential order, so the output is bitwise
identical to the sequential kernel for any worker count.  Write regions
are disjoint by construction; operands are shared read-only.  Workers are
spawned per call and joined before return.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

from .arrays import MoaArray
from .kernel import KernelPlan, _Runner
from .ops import MUL_ADD, OpPair


def partition_rows(noproc: int, workers: int) -> list[range]:
    """Row ownership per worker: worker k gets rows k, k+workers, ..."""
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    return [range(k, noproc, workers) for k in range(workers)]


def execute_parallel(plan: KernelPlan, a: MoaArray, b: MoaArray,
                     ops: OpPair = MUL_ADD, workers: int = 1, *,
                     backend: str | None = None) -> MoaArray:
    """Run the planned product with `workers` fork-join threads.

    Workers beyond the row count own no rows and do no work.  On the
    compiled backend the row loops release the GIL, so workers genuinely
    overlap.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    runner = _Runner(plan, a, b, ops, backend)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(runner.run_rows, k, workers)
                   for k in range(workers)]
        for f in futures:
            f.result()
    return runner.finish()
