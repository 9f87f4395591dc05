"""Small shared helpers."""

from __future__ import annotations

import multiprocessing
import os

from .errors import InputError


def thread_count() -> int:
    """Worker cap from DIAGMIN_THREADS; default 1 (serial)."""
    raw = os.environ.get("DIAGMIN_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise InputError(f"DIAGMIN_THREADS must be an integer, got {raw!r}") from None
    if n < 1:
        raise InputError(f"DIAGMIN_THREADS must be >= 1, got {n}")
    return n


def pmap(fn, items):
    """Order-preserving map, parallel when DIAGMIN_THREADS > 1.

    fn must be a module-level function and the items picklable; results are
    identical to the serial map for any worker count.
    """
    items = list(items)
    workers = min(thread_count(), len(items)) if items else 1
    if workers <= 1:
        return [fn(it) for it in items]
    ctx = multiprocessing.get_context("fork")
    with ctx.Pool(workers) as pool:
        return pool.map(fn, items)
