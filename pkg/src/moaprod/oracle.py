"""Naive index-space products used as ground truth in tests.

These walk the full multi-index of the result with an odometer and fetch
every element through `row_major_offset`, with no stride reuse.  Obvious
correctness over speed; they never touch the kernel module.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .arrays import MoaArray, element_count, row_major_offset
from .errors import RankError, ShapeError
from .ops import MUL_ADD, OpPair


def _odometer(shape: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All full-rank indices of `shape` in row-major order."""
    if element_count(shape) == 0:
        return
    idx = [0] * len(shape)
    while True:
        yield tuple(idx)
        for axis in range(len(shape) - 1, -1, -1):
            idx[axis] += 1
            if idx[axis] < shape[axis]:
                break
            idx[axis] = 0
        else:
            return


def oracle_inner(a: MoaArray, b: MoaArray, ops: OpPair = MUL_ADD) -> MoaArray:
    """Contract the last axis of `a` with the first axis of `b`.

    result[u, v] = fold of reduce over p of combine(a[u, p], b[p, v]),
    starting from the reduce identity, p ascending.
    """
    if a.rank == 0 or b.rank == 0:
        raise RankError("inner product needs operands of rank >= 1")
    if a.shape[-1] != b.shape[0]:
        raise ShapeError(
            f"contraction extents differ: last axis of A is {a.shape[-1]}, "
            f"first axis of B is {b.shape[0]}"
        )
    u_shape = a.shape[:-1]
    v_shape = b.shape[1:]
    p_extent = a.shape[-1]
    out = []
    for u in _odometer(u_shape):
        for v in _odometer(v_shape):
            acc = ops.reduce_identity
            for p in range(p_extent):
                left = a.data[row_major_offset(u + (p,), a.shape)]
                right = b.data[row_major_offset((p,) + v, b.shape)]
                acc = ops.reduce(acc, ops.combine(float(left), float(right)))
            out.append(acc)
    return MoaArray(u_shape + v_shape, out)


def oracle_outer(a: MoaArray, b: MoaArray, ops: OpPair = MUL_ADD) -> MoaArray:
    """Pair every element of `a` with every element of `b` under combine.

    result[idxA ++ idxB] = combine(a[idxA], b[idxB]).
    """
    out = []
    for u in _odometer(a.shape):
        for v in _odometer(b.shape):
            left = a.data[row_major_offset(u, a.shape)]
            right = b.data[row_major_offset(v, b.shape)]
            out.append(ops.combine(float(left), float(right)))
    return MoaArray(a.shape + b.shape, out)
