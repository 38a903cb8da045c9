"""Scoped mpmath precision shared safely between threads.

``mp.prec`` and ``iv.prec`` are process-wide. Every precision change in hauteur goes through
the context managers below, which hold one re-entrant lock for the whole scope, so concurrent
callers never observe or restore each other's working precision.
"""

from __future__ import annotations

import threading
from collections.abc import Iterator
from contextlib import contextmanager

from mpmath import iv, mp

PRECISION_LOCK = threading.RLock()


@contextmanager
def working_precision(bits: int) -> Iterator[None]:
    """Run a block at ``bits`` of ``mpmath.mp`` precision while holding the precision lock."""
    with PRECISION_LOCK, mp.workprec(bits):
        yield


@contextmanager
def interval_precision(bits: int) -> Iterator[None]:
    """Run a block at ``bits`` of ``mpmath.iv`` precision while holding the precision lock."""
    with PRECISION_LOCK:
        saved = iv.prec
        iv.prec = bits
        try:
            yield
        finally:
            iv.prec = saved
