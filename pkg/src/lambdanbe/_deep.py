"""Run deeply recursive code on a worker thread with a large C stack.

Every algorithm in this package is written as plain structural recursion.
Church numerals in the thousands and long divergent reductions nest far
beyond the default interpreter limits, so public entry points are wrapped
with :func:`deep`.  Nested calls on an already-deep thread run inline.
"""

import functools
import sys
import threading

STACK_SIZE = 1 << 30
RECURSION_LIMIT = 1_000_000

_local = threading.local()
_spawn_lock = threading.Lock()


def in_deep_thread():
    return getattr(_local, "active", False)


def run_deep(fn, *args, **kwargs):
    if in_deep_thread():
        return fn(*args, **kwargs)
    box = {}

    def target():
        _local.active = True
        try:
            box["value"] = fn(*args, **kwargs)
        except BaseException as exc:  # re-raised on the calling thread
            box["error"] = exc

    with _spawn_lock:
        if sys.getrecursionlimit() < RECURSION_LIMIT:
            sys.setrecursionlimit(RECURSION_LIMIT)
        previous = threading.stack_size(STACK_SIZE)
        try:
            worker = threading.Thread(target=target, name="lambdanbe-deep", daemon=True)
            worker.start()
        finally:
            threading.stack_size(previous)
    worker.join()
    if "error" in box:
        raise box["error"]
    return box["value"]


def deep(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        if in_deep_thread():
            return fn(*args, **kwargs)
        return run_deep(fn, *args, **kwargs)

    return wrapper
