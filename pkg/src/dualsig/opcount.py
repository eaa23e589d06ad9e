"""Opt-in operation counters for the expensive group operations.

Counting is off unless a :func:`counting` block is active in the current context::

    with counting() as ops:
        verify(pub, msg, sig)
    ops["pairing"], ops["point_mul"]
"""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar

_active: ContextVar[Counter | None] = ContextVar("dualsig_opcount", default=None)


def record(name: str) -> None:
    ops = _active.get()
    if ops is not None:
        ops[name] += 1


@contextmanager
def counting():
    ops: Counter = Counter()
    token = _active.set(ops)
    try:
        yield ops
    finally:
        _active.reset(token)
