"""Kernel selection: compiled extension when available, pure Python otherwise.

Callers access the primitives as ``kernel.mono_mul(...)`` etc. so that
``set_implementation`` can swap them at runtime (used by the parity tests
and the benchmark).  Set DIAGMIN_PURE=1 to force the fallback at import.
"""

from __future__ import annotations

import os

from . import _kernel_py

_IMPLS = {"python": _kernel_py}
try:
    from . import _speedups  # type: ignore[attr-defined]

    _IMPLS["c"] = _speedups
except ImportError:
    pass

_EXPORTED = (
    "mono_degree",
    "mono_mul",
    "mono_divides",
    "mono_div",
    "mono_lcm",
    "mono_coprime",
    "cmp_lex",
    "cmp_degrevlex",
    "variety_compare",
    "canonical_bits",
)

ACTIVE = "python"


def available() -> tuple[str, ...]:
    """Names of the selectable implementations."""
    return tuple(sorted(_IMPLS))


def set_implementation(name: str) -> str:
    """Activate an implementation ("python", "c" or "auto"); returns the active name."""
    global ACTIVE
    if name == "auto":
        name = "c" if "c" in _IMPLS else "python"
    if name not in _IMPLS:
        raise ValueError(f"unknown kernel implementation {name!r}; have {available()}")
    impl = _IMPLS[name]
    for fn in _EXPORTED:
        globals()[fn] = getattr(impl, fn)
    ACTIVE = name
    return ACTIVE


set_implementation("python" if os.environ.get("DIAGMIN_PURE") else "auto")
