"""Plan derivation and the unified inner/outer product loop nest.

Both products run through one kernel: for each result row i, for each
contraction step l, for each column j,

    res[i*restride + j] = reduce(res[i*restride + j],
                                 combine(a[l + i*lstride], b[l*rstride + j]))

The (i, l, j) order keeps the right operand and the result row contiguous
in the inner loop.  The outer product is the rowsinred = 1 case of the
same loop, with the reduce op inert against the identity-filled result.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from . import _backend, _purekernel
from .arrays import MoaArray, Shape, as_shape, element_count
from .errors import PlanError, RankError, ShapeError
from .ops import MUL_ADD, OpPair

# Plans are rejected when any loop-bound product would exceed the index
# range of the compiled kernel.
MAX_INDEX = 2**63 - 1


class ProductMode(enum.Enum):
    INNER = "inner"
    OUTER = "outer"


@dataclass(frozen=True)
class KernelPlan:
    """Loop bounds and flat strides for one product invocation.

    noproc: result rows; rowsinred: contraction length; elsinop: result
    row length.  lstride/rstride/restride: flat strides between rows of A,
    contraction slices of B, and result rows.
    """

    mode: ProductMode
    noproc: int
    rowsinred: int
    elsinop: int
    lstride: int
    rstride: int
    restride: int
    result_shape: Shape


def _checked(plan: KernelPlan) -> KernelPlan:
    worst = max(plan.noproc * plan.elsinop,
                plan.noproc * plan.rowsinred,
                plan.rowsinred * plan.elsinop,
                plan.noproc, plan.rowsinred, plan.elsinop)
    if worst > MAX_INDEX:
        raise ShapeError(
            f"product of shapes {plan.result_shape} needs indices beyond "
            f"the 63-bit range"
        )
    return plan


def plan_inner(shape_a, shape_b) -> KernelPlan:
    """Plan the contraction of the last axis of A with the first axis of B.

    Result shape is drop-last(shape_a) ++ drop-first(shape_b).
    """
    shape_a, shape_b = as_shape(shape_a), as_shape(shape_b)
    if not shape_a or not shape_b:
        raise RankError("inner product needs operands of rank >= 1")
    if shape_a[-1] != shape_b[0]:
        raise ShapeError(
            f"contraction extents differ: last axis of A is {shape_a[-1]}, "
            f"first axis of B is {shape_b[0]}"
        )
    rowsinred = shape_a[-1]
    elsinop = element_count(shape_b[1:])
    return _checked(KernelPlan(
        mode=ProductMode.INNER,
        noproc=element_count(shape_a[:-1]),
        rowsinred=rowsinred,
        elsinop=elsinop,
        lstride=rowsinred,
        rstride=elsinop,
        restride=elsinop,
        result_shape=shape_a[:-1] + shape_b[1:],
    ))


def plan_outer(shape_a, shape_b) -> KernelPlan:
    """Plan the outer product; result shape is shape_a ++ shape_b."""
    shape_a, shape_b = as_shape(shape_a), as_shape(shape_b)
    elsinop = element_count(shape_b)
    return _checked(KernelPlan(
        mode=ProductMode.OUTER,
        noproc=element_count(shape_a),
        rowsinred=1,
        elsinop=elsinop,
        lstride=1,
        rstride=elsinop,
        restride=elsinop,
        result_shape=shape_a + shape_b,
    ))


def _check_plan(plan: KernelPlan, a: MoaArray, b: MoaArray) -> None:
    try:
        if plan.mode is ProductMode.INNER:
            expected = plan_inner(a.shape, b.shape)
        else:
            expected = plan_outer(a.shape, b.shape)
    except (ShapeError, RankError) as exc:
        raise PlanError(f"plan does not fit the operands: {exc}") from exc
    if expected != plan:
        raise PlanError(
            f"plan {plan} is inconsistent with operand shapes "
            f"{a.shape} and {b.shape}"
        )


def _pick_backend(backend: str | None, ops: OpPair) -> str:
    chosen = _backend.resolve(backend)
    if chosen == "compiled" and ops.codes() is None:
        if backend in (None, "auto"):
            return "python"
        raise ValueError(
            "compiled backend supports built-in op pairs only; "
            "this OpPair carries custom callables"
        )
    return chosen


class _Runner:
    """One planned product, ready to run row ranges on a shared result buffer."""

    def __init__(self, plan: KernelPlan, a: MoaArray, b: MoaArray,
                 ops: OpPair, backend: str | None):
        _check_plan(plan, a, b)
        self.plan = plan
        self.backend = _pick_backend(backend, ops)
        count = plan.noproc * plan.elsinop
        if self.backend == "compiled":
            from . import _ckernel
            self._res = np.full(count, ops.reduce_identity, dtype=np.float64)
            codes = ops.codes()
            self._args = (self._res, a.data, b.data,
                          plan.noproc, plan.rowsinred, plan.elsinop,
                          plan.lstride, plan.rstride, plan.restride,
                          codes[0], codes[1])
            self._rows = _ckernel.product_rows
        else:
            self._res = [ops.reduce_identity] * count
            self._args = (self._res, a.data.tolist(), b.data.tolist(),
                          plan.noproc, plan.rowsinred, plan.elsinop,
                          plan.lstride, plan.rstride, plan.restride,
                          ops.combine, ops.reduce)
            self._rows = _purekernel.product_rows

    def run_rows(self, start: int, step: int) -> None:
        self._rows(*self._args, start, step)

    def finish(self) -> MoaArray:
        data = (self._res if isinstance(self._res, np.ndarray)
                else np.array(self._res, dtype=np.float64))
        return MoaArray._wrap(self.plan.result_shape, data)


def execute_sequential(plan: KernelPlan, a: MoaArray, b: MoaArray,
                       ops: OpPair = MUL_ADD, *,
                       backend: str | None = None) -> MoaArray:
    """Run the planned product in a single pass over all result rows."""
    runner = _Runner(plan, a, b, ops, backend)
    runner.run_rows(0, 1)
    return runner.finish()
