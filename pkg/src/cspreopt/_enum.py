"""Block enumeration of cartesian products and an order-preserving worker pool.

Every exhaustive search in the package walks a mixed-radix odometer (first
coordinate slowest). Work is cut into contiguous flat-index ranges so that the
merged result never depends on how many workers ran.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Iterator, Sequence, TypeVar

import numpy as np

T = TypeVar("T")
R = TypeVar("R")

BLOCK_ROWS = 1 << 17
DEFAULT_BUDGET = 10**8


class InstanceTooLarge(ValueError):
    """An exhaustive enumeration would exceed the candidate budget."""

    def __init__(self, what: str, count: int, budget: int):
        super().__init__(f"{what}: {count} candidates exceeds budget {budget}")
        self.count = count
        self.budget = budget


def candidate_budget(budget: int | None = None) -> int:
    if budget is not None:
        return int(budget)
    env = os.environ.get("CSP_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def check_budget(what: str, count: int, budget: int | None = None) -> None:
    limit = candidate_budget(budget)
    if count > limit:
        raise InstanceTooLarge(what, count, limit)


def product_block(dims: Sequence[int], start: int, stop: int) -> np.ndarray:
    """Rows ``start..stop-1`` of the C-ordered product ``range(d0) x range(d1) x ...``."""
    flat = np.arange(start, stop, dtype=np.int64)
    if not dims:
        return np.zeros((stop - start, 0), dtype=np.int64)
    return np.stack(np.unravel_index(flat, tuple(dims)), axis=1)


def split_range(total: int, parts: int) -> list[tuple[int, int]]:
    """Cut ``[0, total)`` into contiguous ranges of at most BLOCK_ROWS rows."""
    size = max(1, min(BLOCK_ROWS, math.ceil(total / max(parts, 1))))
    return [(s, min(s + size, total)) for s in range(0, total, size)]


def ordered_map(fn: Callable[[T], R], tasks: Iterable[T], jobs: int = 1) -> list[R]:
    """``list(map(fn, tasks))``, optionally fanned out to worker processes."""
    tasks = list(tasks)
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks))


def chunked(it: Iterable[T], size: int) -> Iterator[list[T]]:
    buf: list[T] = []
    for item in it:
        buf.append(item)
        if len(buf) == size:
            yield buf
            buf = []
    if buf:
        yield buf


def product_layout(dims: Sequence[int]) -> tuple[int, int, int]:
    """Split a product into ``(suffix coordinates, prefix count, suffix size)``.

    The suffix is the longest tail whose size stays within BLOCK_ROWS (at
    least one coordinate).
    """
    q, size = 1, dims[-1]
    while q < len(dims) and size * dims[-q - 1] <= BLOCK_ROWS:
        q += 1
        size *= dims[-q]
    return q, math.prod(dims[:-q]), size


def _stack_counts(parts: Sequence[np.ndarray]) -> np.ndarray:
    """Column counts for every combination of ``parts``, C order."""
    acc = parts[0]
    for p in parts[1:]:
        acc = (acc[:, None] + p[None, :]).reshape((-1,) + p.shape[1:])
    return acc


def product_count_blocks(
    parts: Sequence[np.ndarray], prefix_start: int, prefix_stop: int
) -> Iterator[tuple[int, np.ndarray]]:
    """Summed one-hot rows for a slice of the product of ``parts``.

    ``parts[i]`` is ``(m_i, l, s)``. Yields ``(first flat index, counts)``
    covering prefixes ``prefix_start..prefix_stop-1`` and the whole suffix,
    in C order.
    """
    dims = [len(p) for p in parts]
    q, _, size = product_layout(dims)
    dtype = np.int8 if len(parts) < 127 else np.int32
    parts = [p.astype(dtype, copy=False) for p in parts]
    suffix = _stack_counts(parts[-q:])
    head = parts[:-q]
    step = max(1, (BLOCK_ROWS * 4) // size)
    for s in range(prefix_start, prefix_stop, step):
        e = min(s + step, prefix_stop)
        if head:
            idx = product_block(dims[:-q], s, e)
            pre = sum(head[i][idx[:, i]] for i in range(len(head)))
            block = (pre[:, None] + suffix[None]).reshape((-1,) + suffix.shape[1:])
        else:
            block = suffix
        yield s * size, block


def split_prefixes(dims: Sequence[int], jobs: int) -> list[tuple[int, int]]:
    _, prefixes, size = product_layout(dims)
    per = max(1, (BLOCK_ROWS * 4) // size)
    if jobs > 1:
        per = max(1, min(per, math.ceil(prefixes / jobs)))
    return [(s, min(s + per, prefixes)) for s in range(0, prefixes, per)]
