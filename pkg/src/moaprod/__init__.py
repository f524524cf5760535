"""Generalized inner and outer products of multi-dimensional arrays.

Arrays are shape vectors over flat row-major float64 storage.  Both
products run through one stride-based kernel with a pluggable
combine/reduce operation pair; a fork-join executor partitions result
rows round-robin across workers with bitwise-deterministic output.  The
hot loops live in a compiled extension when available, with an identical
pure-Python fallback selected at import.
"""

from ._backend import DEFAULT_BACKEND, HAVE_COMPILED
from .arrays import (
    IndexVector,
    MoaArray,
    Shape,
    dump,
    dumps,
    element_count,
    load,
    loads,
    psi_select,
    reshape,
    row_major_offset,
)
from .errors import BoundsError, PlanError, RankError, ShapeError
from .gemm import GemmParams, gemm_baseline
from .kernel import (
    KernelPlan,
    ProductMode,
    execute_sequential,
    plan_inner,
    plan_outer,
)
from .ops import MUL_ADD, OpPair, builtin_pairs, op_pair
from .oracle import oracle_inner, oracle_outer
from .parallel import execute_parallel, partition_rows

__version__ = "0.1.0"


def active_backend() -> str:
    """Name of the backend used when none is requested explicitly."""
    return DEFAULT_BACKEND


def inner(a: MoaArray, b: MoaArray, ops: OpPair = MUL_ADD,
          workers: int = 1, *, backend: str | None = None) -> MoaArray:
    """Contract the last axis of `a` with the first axis of `b`."""
    plan = plan_inner(a.shape, b.shape)
    if workers == 1:
        return execute_sequential(plan, a, b, ops, backend=backend)
    return execute_parallel(plan, a, b, ops, workers, backend=backend)


def outer(a: MoaArray, b: MoaArray, ops: OpPair = MUL_ADD,
          workers: int = 1, *, backend: str | None = None) -> MoaArray:
    """Combine every element of `a` with every element of `b`."""
    plan = plan_outer(a.shape, b.shape)
    if workers == 1:
        return execute_sequential(plan, a, b, ops, backend=backend)
    return execute_parallel(plan, a, b, ops, workers, backend=backend)
