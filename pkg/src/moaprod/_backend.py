"""Backend selection: compiled extension when built, pure Python otherwise."""

from __future__ import annotations

try:
    from . import _ckernel
    HAVE_COMPILED = True
except ImportError:
    _ckernel = None
    HAVE_COMPILED = False

DEFAULT_BACKEND = "compiled" if HAVE_COMPILED else "python"

BACKENDS = ("compiled", "python")


def resolve(backend: str | None) -> str:
    """Map None/'auto' to the default; reject unavailable or unknown names."""
    if backend is None or backend == "auto":
        return DEFAULT_BACKEND
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; choose from {BACKENDS}")
    if backend == "compiled" and not HAVE_COMPILED:
        raise ValueError("compiled backend requested but the extension is not built")
    return backend
