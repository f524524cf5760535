"""Reference GEMM loop used as the benchmark baseline.

Computes C = alpha*A*B + beta*C with the classic (J, L, I) column loop
nest: per column, the beta pass zeroes or scales, then each L adds
temp = alpha*B(L,J) times column L of A, skipping L entirely when
B(L,J) is zero.  Matrices are held column-major inside this module so
the loop keeps its original locality character; conversion from the
row-major array type happens only at the boundary.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _backend, _purekernel
from .arrays import MoaArray
from .errors import ShapeError


@dataclass(frozen=True)
class GemmParams:
    """Scaling factors and dimensions: C is m x n, A is m x k, B is k x n."""

    alpha: float
    beta: float
    m: int
    n: int
    k: int

    def __post_init__(self):
        for name in ("m", "n", "k"):
            if getattr(self, name) < 1:
                raise ShapeError(f"dimension {name} must be >= 1, "
                                 f"got {getattr(self, name)}")


def to_colmajor(a: MoaArray, rows: int, cols: int) -> np.ndarray:
    """Flat column-major copy of a rows x cols row-major array."""
    if a.shape != (rows, cols):
        raise ShapeError(f"expected shape ({rows}, {cols}), got {a.shape}")
    # flatten() always copies; ravel may alias the frozen source for
    # single-row/column matrices.
    return a.data.reshape(rows, cols).T.flatten()


def from_colmajor(flat: np.ndarray, rows: int, cols: int) -> MoaArray:
    """Row-major array from a flat column-major buffer."""
    data = flat.reshape(cols, rows).T.flatten()
    return MoaArray._wrap((rows, cols), data)


def run_colmajor(params: GemmParams, a_cm: np.ndarray, b_cm: np.ndarray,
                 c_cm: np.ndarray, workers: int = 1, *,
                 backend: str | None = None) -> None:
    """Run the GEMM loop in place on flat column-major float64 buffers.

    Columns are dealt to workers round-robin (worker w of W owns columns
    j with j mod W == w); each column is updated entirely by its owner,
    so results are bitwise independent of the worker count.
    """
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    chosen = _backend.resolve(backend)
    if chosen == "compiled":
        from . import _ckernel
        cols = _ckernel.gemm_cols
        args = (c_cm, a_cm, b_cm, params.alpha, params.beta,
                params.m, params.n, params.k)
        run = lambda start: cols(*args, start, workers)
    else:
        c_list = c_cm.tolist()
        args = (c_list, a_cm.tolist(), b_cm.tolist(), params.alpha,
                params.beta, params.m, params.n, params.k)
        run = lambda start: _purekernel.gemm_cols(*args, start, workers)
    # always fork-join, even for one worker, so benchmark timings carry
    # the same wrapper overhead as the product kernel path
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(run, w) for w in range(workers)]
        for f in futures:
            f.result()
    if chosen != "compiled":
        c_cm[:] = c_list


def gemm_baseline(params: GemmParams, a: MoaArray, b: MoaArray, c: MoaArray,
                  *, workers: int = 1, backend: str | None = None) -> MoaArray:
    """C = alpha*A*B + beta*C on row-major arrays; returns a new array.

    `c` supplies the beta term and is left unchanged.
    """
    a_cm = to_colmajor(a, params.m, params.k)
    b_cm = to_colmajor(b, params.k, params.n)
    c_cm = to_colmajor(c, params.m, params.n)
    run_colmajor(params, a_cm, b_cm, c_cm, workers, backend=backend)
    return from_colmajor(c_cm, params.m, params.n)
