"""Pure-Python hot loops; fallback when the compiled extension is absent.

Both entry points mirror moaprod._ckernel exactly: same loop nests, same
arithmetic, one operation at a time with no fused multiply-add, so results
are bit-identical across backends.  Buffers are plain lists here (faster
element access than ndarray scalars); workers share them and write
disjoint regions only.
"""

from __future__ import annotations

from typing import Callable


def product_rows(
    res: list,
    a: list,
    b: list,
    noproc: int,
    rowsinred: int,
    elsinop: int,
    lstride: int,
    rstride: int,
    restride: int,
    combine: Callable[[float, float], float],
    reduce: Callable[[float, float], float],
    start: int,
    step: int,
) -> None:
    """Accumulate result rows start, start+step, ... of the unified product."""
    for i in range(start, noproc, step):
        ibase = i * restride
        for l in range(rowsinred):
            av = a[l + i * lstride]
            lbase = l * rstride
            for j in range(elsinop):
                res[ibase + j] = reduce(res[ibase + j], combine(av, b[lbase + j]))


def gemm_cols(
    c: list,
    a: list,
    b: list,
    alpha: float,
    beta: float,
    m: int,
    n: int,
    k: int,
    start: int,
    step: int,
    skip_zero: bool = True,
) -> None:
    """Update result columns start, start+step, ... of C = alpha*A*B + beta*C.

    All three buffers are flat column-major.  `skip_zero` keeps the
    B(L,J) != 0 work-skipping test; disabling it must not change results.
    """
    for j in range(start, n, step):
        jbase = j * m
        if beta == 0.0:
            for i in range(m):
                c[jbase + i] = 0.0
        elif beta != 1.0:
            for i in range(m):
                c[jbase + i] = beta * c[jbase + i]
        for l in range(k):
            blj = b[l + j * k]
            if skip_zero and blj == 0.0:
                continue
            temp = alpha * blj
            lbase = l * m
            for i in range(m):
                c[jbase + i] = c[jbase + i] + temp * a[lbase + i]
