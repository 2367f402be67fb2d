"""
Workers - Ordered fan-out of array chunks over a thread pool.

Results are collected in submission order, so the output never depends on
how many workers ran or which finished first.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Optional

import numpy as np

from config import get_settings

logger = logging.getLogger(__name__)

# Below this many elements the pool overhead outweighs the split
MIN_CHUNK = 4096


def split_slices(count: int, parts: int) -> List[slice]:
    """Split range(count) into at most `parts` contiguous, nearly equal slices."""
    parts = max(1, min(parts, count))
    bounds = np.linspace(0, count, parts + 1).astype(int)
    return [slice(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def resolve_workers(workers: Optional[int]) -> int:
    """Use the explicit worker count, falling back to the configured thread cap."""
    if workers is not None and workers > 0:
        return workers
    return get_settings().worker_count


def map_chunks(
    func: Callable[[np.ndarray], np.ndarray],
    values: np.ndarray,
    workers: Optional[int] = None,
) -> np.ndarray:
    """
    Apply func to contiguous chunks of values (split along axis 0) in parallel.

    Args:
        func: Vectorized kernel; must return an array with one leading entry per input
        values: Input array
        workers: Thread cap; None uses Settings.worker_count

    Returns:
        The chunk results concatenated in input order
    """
    count = len(values)
    workers = resolve_workers(workers)
    if count == 0:
        return func(values)

    parts = min(workers, max(1, count // MIN_CHUNK))
    if parts <= 1:
        return func(values)

    slices = split_slices(count, parts)
    logger.debug(f"Fanning {count} elements out to {len(slices)} chunks")
    with ThreadPoolExecutor(max_workers=len(slices)) as pool:
        futures = [pool.submit(func, values[s]) for s in slices]
        results = [future.result() for future in futures]
    return np.concatenate(results, axis=0)
