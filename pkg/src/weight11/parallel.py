"""Deterministic worker-pool helper.

Results are returned in input order regardless of the worker count, so
callers are byte-reproducible for any setting.
"""

from __future__ import annotations

import multiprocessing as mp
import os

_worker_fn = None


def _init(fn):
    global _worker_fn
    _worker_fn = fn


def _call(arg):
    return _worker_fn(arg)


def worker_count(default=1):
    env = os.environ.get("GC_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return default


def parallel_map(fn, items, workers=1):
    """Map preserving input order; serial when workers <= 1 or tiny input."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    # local functions cannot cross process boundaries; fall back serially
    try:
        with mp.get_context("fork").Pool(
                min(workers, len(items)), _init, (fn,)) as pool:
            return pool.map(_call, items)
    except Exception:
        return [fn(x) for x in items]
