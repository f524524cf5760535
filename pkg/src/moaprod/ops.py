"""Binary operation pairs for the generalized product.

A product is parameterized by a combine operation (the generalized "*")
and an associative reduce operation with its identity (the generalized
"+" and 0).  The default pair (multiply, add, 0.0) gives the ordinary
inner/outer product; pairs such as (add, min, +inf) give tropical
products.

Division by zero follows IEEE semantics (inf/NaN), matching the compiled
backend; min/max are written so that reduce(identity, x) == x even for
NaN inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator


def _add(a: float, b: float) -> float:
    return a + b


def _subtract(a: float, b: float) -> float:
    return a - b


def _multiply(a: float, b: float) -> float:
    return a * b


def _divide(a: float, b: float) -> float:
    try:
        return a / b
    except ZeroDivisionError:
        if a == 0.0 or math.isnan(a):
            return math.nan
        return math.inf * math.copysign(1.0, a) * math.copysign(1.0, b)


def _minimum(a: float, b: float) -> float:
    return a if a < b else b


def _maximum(a: float, b: float) -> float:
    return a if a > b else b


# Code values are mirrored by the compiled kernel; keep the numbering in
# sync with _ckernel.pyx.
COMBINE_OPS: dict[str, tuple[int, Callable[[float, float], float]]] = {
    "add": (0, _add),
    "subtract": (1, _subtract),
    "multiply": (2, _multiply),
    "divide": (3, _divide),
    "min": (4, _minimum),
    "max": (5, _maximum),
}

REDUCE_OPS: dict[str, tuple[int, Callable[[float, float], float], float]] = {
    "add": (0, _add, 0.0),
    "multiply": (1, _multiply, 1.0),
    "min": (2, _minimum, math.inf),
    "max": (3, _maximum, -math.inf),
}


@dataclass(frozen=True)
class OpPair:
    """Combine operation plus reduce operation with its identity element.

    `combine_name`/`reduce_name` are set for built-in pairs and enable the
    compiled fast path; pairs built from arbitrary callables run on the
    pure-Python backend.
    """

    combine: Callable[[float, float], float]
    reduce: Callable[[float, float], float]
    reduce_identity: float
    combine_name: str | None = None
    reduce_name: str | None = None

    def codes(self) -> tuple[int, int] | None:
        """(combine_code, reduce_code) for built-in pairs, else None."""
        if self.combine_name is None or self.reduce_name is None:
            return None
        return COMBINE_OPS[self.combine_name][0], REDUCE_OPS[self.reduce_name][0]

    def __repr__(self) -> str:
        c = self.combine_name or self.combine
        r = self.reduce_name or self.reduce
        return f"OpPair(combine={c}, reduce={r}, identity={self.reduce_identity})"


def op_pair(combine: str = "multiply", reduce: str = "add") -> OpPair:
    """Build a built-in OpPair by name.

    combine: add, subtract, multiply, divide, min, max.
    reduce: add, multiply, min, max (identities 0, 1, +inf, -inf).
    """
    if combine not in COMBINE_OPS:
        raise ValueError(
            f"unknown combine op {combine!r}; choose from {sorted(COMBINE_OPS)}"
        )
    if reduce not in REDUCE_OPS:
        raise ValueError(
            f"unknown reduce op {reduce!r}; choose from {sorted(REDUCE_OPS)}"
        )
    _, cfunc = COMBINE_OPS[combine]
    _, rfunc, identity = REDUCE_OPS[reduce]
    return OpPair(cfunc, rfunc, identity, combine_name=combine, reduce_name=reduce)


MUL_ADD = op_pair("multiply", "add")


def builtin_pairs() -> Iterator[OpPair]:
    """All 24 built-in combine/reduce combinations."""
    for combine in COMBINE_OPS:
        for reduce in REDUCE_OPS:
            yield op_pair(combine, reduce)
