"""Order-preserving process-pool map used by the exhaustive sweeps."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable


def parallel_map(fn: Callable, items: Iterable, threads: int = 1) -> list:
    """``[fn(x) for x in items]``, fanned out over ``threads`` worker processes.

    Results come back in input order, so callers see identical output for
    every ``threads`` value.
    """
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
