"""Deterministic r-sampling approximation scheme.

Every r-sample of windows yields a candidate pattern (its column majority);
the candidate is realigned against all sequences and the cheapest realigned
pattern cost wins. Larger ``r`` tightens the guarantee returned by
:func:`ratio_bound` at the price of ``C(t, r) * (n - l + 1)^r`` candidates.

Sample order is fixed: sequence-index combinations in lexicographic order, and
within a combination the positions as an odometer (first pick slowest). The
first minimum in that order is reported, whatever the number of workers.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import partial
from typing import Iterator

import numpy as np

from ._enum import BLOCK_ROWS, chunked, ordered_map, product_count_blocks, split_prefixes
from .model import (
    Alignment,
    CostedSolution,
    PatternCostCache,
    Instance,
    Occurrence,
    Pattern,
    Solution,
    consensus_counts,
    consensus_of,
    realign,
    substring_at,
)

SAMPLE_MODES = ("distinct-seq", "multiset")


class UnboundedRatio(ValueError):
    """The ratio formula has a non-positive denominator for this ``r``."""


@dataclass(frozen=True)
class RSample:
    picks: tuple[Occurrence, ...]

    def __post_init__(self):
        picks = tuple(Occurrence(*p) for p in self.picks)
        if not picks:
            raise ValueError("an r-sample needs at least one pick")
        if list(picks) != sorted(picks):
            raise ValueError("r-sample picks must be sorted by (seq_index, position)")
        object.__setattr__(self, "picks", picks)

    @property
    def r(self) -> int:
        return len(self.picks)

    @property
    def distinct_sequences(self) -> bool:
        return len({p.seq_index for p in self.picks}) == len(self.picks)


@dataclass(frozen=True)
class RatioParams:
    r: int
    sigma_size: int

    def __post_init__(self):
        if self.sigma_size < 2:
            raise ValueError("ratio needs an alphabet of at least two symbols")

    @property
    def bound(self) -> float:
        return ratio_bound(self.r, self.sigma_size)


def ratio_bound(r: int, sigma_size: int) -> float:
    """``1 + (4|S| - 4) / (sqrt(e) * (sqrt(4r + 1) - 3))``; finite only for ``r >= 3``."""
    denom = math.sqrt(math.e) * (math.sqrt(4 * r + 1) - 3)
    if r <= 2 or denom <= 0:
        raise UnboundedRatio(f"ratio is unbounded for r={r} (needs r >= 3)")
    return 1 + (4 * sigma_size - 4) / denom


def sample_count(t: int, num_windows: int, r: int, mode: str = "distinct-seq") -> int:
    if mode == "multiset":
        return math.comb(t * num_windows + r - 1, r)
    return math.comb(t, r) * num_windows**r


def _check_r(inst: Instance, r: int, mode: str) -> None:
    if mode not in SAMPLE_MODES:
        raise ValueError(f"unknown sample mode {mode!r}; expected one of {SAMPLE_MODES}")
    if not 1 <= r <= inst.t:
        raise ValueError(f"sample size r={r} must lie in 1..{inst.t}")


def _sample_tasks(inst: Instance, r: int, mode: str, skip_within: int = 0, jobs: int = 1) -> list:
    """Work units in enumeration order.

    ``skip_within`` drops samples drawn only from the first ``skip_within``
    sequences.
    """
    if mode == "multiset":
        return [("multiset", None)]
    tasks = []
    for combo in itertools.combinations(range(inst.t), r):
        if combo[-1] < skip_within:
            continue
        tasks.extend(("combo", (combo, rng)) for rng in split_prefixes((inst.num_windows,) * r, jobs))
    return tasks


def _combo_parts(inst: Instance, combo) -> list[np.ndarray]:
    m = inst.num_windows
    return [inst.onehot[i * m:(i + 1) * m] for i in combo]


def _task_blocks(inst: Instance, r: int, task, skip_within: int) -> Iterator[tuple[np.ndarray, np.ndarray]]:
    """``(row ids, column counts)`` per block; a row id maps back to the sample."""
    kind, payload = task
    m = inst.num_windows
    if kind == "combo":
        combo, (start, stop) = payload
        for offset, counts in product_count_blocks(_combo_parts(inst, combo), start, stop):
            yield np.arange(offset, offset + len(counts)), counts
        return
    ids = itertools.combinations_with_replacement(range(inst.t * m), r)
    for block in chunked(ids, BLOCK_ROWS):
        g = np.array(block, dtype=np.int64)
        g = g[(g // m).max(axis=1) >= skip_within]
        if len(g):
            yield g, inst.onehot[g].sum(axis=1)


def _row_to_sample(inst: Instance, r: int, task, row) -> RSample:
    kind, payload = task
    m = inst.num_windows
    if kind == "combo":
        combo, _ = payload
        pos = np.unravel_index(int(row), (m,) * r)
        return RSample(tuple(Occurrence(s, int(p)) for s, p in zip(combo, pos)))
    return RSample(tuple(Occurrence(int(gid) // m, int(gid) % m) for gid in row))


def _best_in_task(inst: Instance, r: int, skip_within: int, task) -> tuple[int | None, int, RSample | None]:
    cache = PatternCostCache(inst)
    best_cost, best_sample, seen = None, None, 0
    for rows, counts in _task_blocks(inst, r, task, skip_within):
        cons, _ = consensus_counts(counts)
        costs = cache.lookup(cons)
        k = int(np.argmin(costs))
        if best_cost is None or costs[k] < best_cost:
            best_cost, best_sample = int(costs[k]), _row_to_sample(inst, r, task, rows[k])
        seen += len(rows)
    return best_cost, seen, best_sample


@dataclass(frozen=True)
class SweepResult:
    """Cheapest sample of a sweep and the number of samples scored."""

    sample: RSample | None
    alignment: Alignment | None
    samples: int

    @property
    def cost(self) -> int | None:
        return None if self.alignment is None else self.alignment.cost


def sweep_samples(
    inst: Instance, r: int, *, mode: str = "distinct-seq", skip_within: int = 0, jobs: int = 1
) -> SweepResult:
    """Score every r-sample (optionally skipping base-only ones) and keep the first minimum."""
    _check_r(inst, r, mode)
    tasks = _sample_tasks(inst, r, mode, skip_within, jobs)
    results = ordered_map(partial(_best_in_task, inst, r, skip_within), tasks, jobs)
    best_cost, best_sample, total = None, None, 0
    for cost, seen, sample in results:
        total += seen
        if sample is not None and (best_cost is None or cost < best_cost):
            best_cost, best_sample = cost, sample
    if best_sample is None:
        return SweepResult(None, None, total)
    aln = realign(inst, consensus_of_sample(inst, best_sample))
    assert aln.cost == best_cost
    return SweepResult(best_sample, aln, total)


def consensus_of_sample(inst: Instance, sample: RSample) -> Pattern:
    return consensus_of([substring_at(inst, p) for p in sample.picks], inst.alphabet)


def enumerate_r_samples(inst: Instance, r: int, mode: str = "distinct-seq") -> Iterator[RSample]:
    """Every r-sample once, in the enumeration order used by the solvers."""
    _check_r(inst, r, mode)
    m = inst.num_windows
    if mode == "multiset":
        for row in itertools.combinations_with_replacement(range(inst.t * m), r):
            yield RSample(tuple(Occurrence(g // m, g % m) for g in row))
        return
    for combo in itertools.combinations(range(inst.t), r):
        for pos in itertools.product(range(m), repeat=r):
            yield RSample(tuple(Occurrence(s, p) for s, p in zip(combo, pos)))


@dataclass(frozen=True)
class PtasResult:
    """Output of :func:`ptas_solve`.

    ``cost`` is the realigned pattern cost that the scheme minimises;
    ``costed`` re-scores the same windows against their own consensus.
    """

    pattern: Pattern
    solution: Solution
    cost: int
    costed: CostedSolution
    sample: RSample
    samples: int


def ptas_solve(inst: Instance, r: int, *, mode: str = "distinct-seq", jobs: int = 1) -> PtasResult:
    sweep = sweep_samples(inst, r, mode=mode, jobs=jobs)
    aln = sweep.alignment
    return PtasResult(aln.pattern, aln.solution, aln.cost, aln.costed, sweep.sample, sweep.samples)
