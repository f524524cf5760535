"""Shape algebra, flat float64 storage, and index-vector subarray selection.

An array is a shape vector (tuple of non-negative extents) plus a flat
row-major buffer of 64-bit floats.  Rank 0 is a scalar with one element;
zero extents are legal and give empty arrays.  Arrays are immutable once
constructed, so any number of threads may read them concurrently.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import BoundsError, RankError, ShapeError

Shape = tuple[int, ...]
IndexVector = tuple[int, ...]


def as_shape(extents: Iterable[int]) -> Shape:
    """Validate extents (integers >= 0) and return them as a tuple."""
    shape = tuple(int(e) for e in extents)
    for axis, e in enumerate(shape):
        if e < 0:
            raise ShapeError(f"extent {e} on axis {axis} is negative")
    return shape


def element_count(shape: Sequence[int]) -> int:
    """Number of elements held by `shape`: the product of its extents (1 for rank 0)."""
    return math.prod(shape)


def row_major_strides(shape: Sequence[int]) -> tuple[int, ...]:
    """Per-axis flat strides for row-major layout (last axis varies fastest)."""
    strides = [1] * len(shape)
    for k in range(len(shape) - 2, -1, -1):
        strides[k] = strides[k + 1] * shape[k + 1]
    return tuple(strides)


def _check_index(idx: Sequence[int], shape: Sequence[int]) -> None:
    for axis, (component, extent) in enumerate(zip(idx, shape)):
        if component < 0 or component >= extent:
            raise BoundsError(
                f"index {component} out of bounds on axis {axis} with extent {extent}"
            )


def row_major_offset(idx: Sequence[int], shape: Sequence[int]) -> int:
    """Flat offset of the full-rank index `idx` into a row-major buffer of `shape`."""
    if len(idx) != len(shape):
        raise BoundsError(
            f"index has {len(idx)} components, shape has rank {len(shape)}"
        )
    _check_index(idx, shape)
    strides = row_major_strides(shape)
    return sum(c * s for c, s in zip(idx, strides))


class MoaArray:
    """A shape plus a flat row-major sequence of float64 elements.

    The buffer is copied on construction and frozen, so instances behave
    as immutable values.
    """

    __slots__ = ("shape", "data")

    shape: Shape
    data: np.ndarray

    def __init__(self, shape: Iterable[int], data: Iterable[float]):
        shape = as_shape(shape)
        buf = np.array(list(data) if not isinstance(data, np.ndarray) else data,
                       dtype=np.float64).ravel()
        if buf.size != element_count(shape):
            raise ShapeError(
                f"shape {shape} holds {element_count(shape)} elements, "
                f"got {buf.size} data values"
            )
        buf.flags.writeable = False
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "data", buf)

    def __setattr__(self, name, value):
        raise AttributeError("MoaArray is immutable")

    @classmethod
    def _wrap(cls, shape: Shape, data: np.ndarray) -> "MoaArray":
        """Take ownership of `data` (float64, correct length) without copying."""
        self = object.__new__(cls)
        data.flags.writeable = False
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "data", data)
        return self

    @classmethod
    def from_values(cls, values) -> "MoaArray":
        """Build from a scalar or (nested) sequence; shape is inferred."""
        arr = np.asarray(values, dtype=np.float64)
        return cls._wrap(arr.shape, np.ascontiguousarray(arr).ravel().copy())

    @property
    def rank(self) -> int:
        return len(self.shape)

    @property
    def count(self) -> int:
        return self.data.size

    def item(self) -> float:
        """The single element of a one-element array."""
        if self.data.size != 1:
            raise ShapeError(f"array of shape {self.shape} is not a single element")
        return float(self.data[0])

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoaArray):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(
            self.data, other.data, equal_nan=True
        )

    def __hash__(self):
        return hash((self.shape, self.data.tobytes()))

    def __repr__(self) -> str:
        head = ", ".join(repr(v) for v in self.data[:8])
        tail = ", ..." if self.data.size > 8 else ""
        return f"MoaArray(shape={self.shape}, data=[{head}{tail}])"


def psi_select(idx: Sequence[int], a: MoaArray) -> MoaArray:
    """Select the subarray of `a` addressed by the (possibly partial) index `idx`.

    A k-component index drops the first k axes; the result's data is the
    contiguous row-major slice starting at `idx` padded with zeros.  An
    empty index returns `a` itself; a full-rank index yields a rank-0
    scalar.  Over-long indices are rejected rather than truncated.
    """
    idx = tuple(int(c) for c in idx)
    if len(idx) > a.rank:
        raise RankError(
            f"index of length {len(idx)} applied to array of rank {a.rank}"
        )
    if not idx:
        return a
    _check_index(idx, a.shape)
    sub_shape = a.shape[len(idx):]
    start = row_major_offset(idx + (0,) * len(sub_shape), a.shape) if element_count(
        a.shape) else 0
    n = element_count(sub_shape)
    return MoaArray._wrap(sub_shape, a.data[start:start + n].copy())


def reshape(a: MoaArray, shape: Iterable[int]) -> MoaArray:
    """Reinterpret `a` under a new shape with the same element count.

    The flat data sequence is unchanged (this is not a transpose).
    """
    shape = as_shape(shape)
    if element_count(shape) != a.count:
        raise ShapeError(
            f"cannot reshape {a.count} elements into shape {shape} "
            f"holding {element_count(shape)}"
        )
    return MoaArray._wrap(shape, a.data)


def dumps(a: MoaArray) -> str:
    """Two-line text literal: extents, then row-major elements.

    Floats are printed in shortest round-trip decimal form, so
    ``loads(dumps(a))`` reproduces `a` bit-exactly.
    """
    extents = " ".join(str(e) for e in a.shape)
    values = " ".join(repr(float(v)) for v in a.data)
    return f"{extents}\n{values}\n"


def loads(text: str) -> MoaArray:
    """Parse the two-line array literal produced by `dumps`."""
    lines = text.split("\n")
    if len(lines) < 2:
        raise ShapeError("array literal needs an extents line and a values line")
    shape = as_shape(int(tok) for tok in lines[0].split())
    values = [float(tok) for tok in lines[1].split()]
    if len(values) != element_count(shape):
        raise ShapeError(
            f"shape {shape} holds {element_count(shape)} elements, "
            f"literal has {len(values)} values"
        )
    return MoaArray(shape, values)


def dump(a: MoaArray, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(a))


def load(path) -> MoaArray:
    with open(path) as fh:
        return loads(fh.read())
