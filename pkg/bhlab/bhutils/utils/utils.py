"""Copyright (c) 2026, BHLab Development Team.

Distributed under the BSD 3-Clause License. See LICENSE for details.
"""

"""Seeding, parallel evaluation and argument parsing helpers."""

import concurrent.futures
import contextlib
import contextvars

import numpy as np

from bhlab.bhutils.utils.configuration import thread_cap
from bhlab.bhutils.utils.constants import MASK64
from bhlab.bhutils.utils.exceptions import InvalidParameterType

_THREAD_LIMIT = contextvars.ContextVar("bhlab_thread_limit", default=None)


def mix64(value):
    """
    splitmix64 finalizer on a 64-bit unsigned integer.
    """
    z = value & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def derive_seed(seed, index):
    """
    Seed of the `index`-th independent stream derived from a master seed.
    """
    return mix64((seed + index) & MASK64)


def make_rng(seed, index=0):
    return np.random.default_rng(derive_seed(seed, index))


@contextlib.contextmanager
def thread_limit(workers):
    """
    Cap the worker threads of every parallel_map inside the block, overriding BHLAB_THREADS.
    """
    if int(workers) != workers or workers < 1:
        raise InvalidParameterType("thread limit must be a positive integer, got %r" % (workers,))
    token = _THREAD_LIMIT.set(int(workers))
    try:
        yield
    finally:
        _THREAD_LIMIT.reset(token)


def active_thread_cap():
    limit = _THREAD_LIMIT.get()
    return limit if limit is not None else thread_cap()


def parallel_map(function, items, max_workers=None):
    """
    Apply `function` to every item, possibly on worker threads, and return
    the results in input order. Workers inherit the caller's thread limit.
    """
    items = list(items)
    workers = max_workers if max_workers is not None else active_thread_cap()
    if workers <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    context = contextvars.copy_context()

    def call(item):
        return context.copy().run(function, item)

    with concurrent.futures.ThreadPoolExecutor(max_workers=min(workers, len(items))) as executor:
        return list(executor.map(call, items))


def parse_n_values(text):
    """
    Parse `1,4,9` or `a:b` (inclusive) into a strictly increasing list of positive integers.
    """
    text = text.strip()
    try:
        if ":" in text:
            low, high = text.split(":", 1)
            values = list(range(int(low), int(high) + 1))
        else:
            values = [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise InvalidParameterType("Invalid n list %r: expected comma list or a:b range." % text)
    if not values:
        raise InvalidParameterType("Invalid n list %r: no values." % text)
    if any(value < 1 for value in values):
        raise InvalidParameterType("Invalid n list %r: values must be positive." % text)
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidParameterType("Invalid n list %r: values must be strictly increasing." % text)
    return values


def parse_float_pair(text):
    """
    Parse `x,y` into two floats.
    """
    parts = text.split(",")
    if len(parts) != 2:
        raise InvalidParameterType("Expected two comma-separated numbers, got %r." % text)
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        raise InvalidParameterType("Expected two comma-separated numbers, got %r." % text)


def format_real(value):
    """
    Render a real with 17 significant digits.
    """
    return '{:.17g}'.format(value)
