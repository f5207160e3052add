"""Exhaustive oracles for the exact optimum.

Two searches over unrelated spaces: every occurrence tuple (``(n-l+1)^t``
candidates, each scored against its own consensus) and every pattern in
``alphabet^l`` (each scored by realignment). They must agree, because the
consensus of an optimal tuple is an optimal pattern and vice versa.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial

import numpy as np

from ._enum import check_budget, ordered_map, product_block, product_count_blocks, split_prefixes, split_range
from .model import (
    CostedSolution,
    Instance,
    Pattern,
    Solution,
    pattern_costs,
    realign,
    solution_cost,
)


@dataclass(frozen=True)
class ExactResult:
    costed: CostedSolution
    nodes_explored: int
    pattern: Pattern

    @property
    def cost(self) -> int:
        return self.costed.cost

    @property
    def solution(self) -> Solution:
        return self.costed.solution


def _tuple_range(inst: Instance, prefixes: tuple[int, int]) -> tuple[int, int]:
    parts = [inst.onehot[i * inst.num_windows:(i + 1) * inst.num_windows] for i in range(inst.t)]
    best = (inst.t * inst.l + 1, -1)
    for offset, counts in product_count_blocks(parts, *prefixes):
        top = counts[..., 0]
        for a in range(1, counts.shape[-1]):
            top = np.maximum(top, counts[..., a])
        costs = inst.t * inst.l - top.sum(axis=-1, dtype=np.int64)
        k = int(np.argmin(costs))
        best = min(best, (int(costs[k]), offset + k))
    return best


def _tuples_bnb(inst: Instance) -> tuple[tuple[int, ...], int]:
    """Depth-first search with the prefix consensus cost as a lower bound.

    Adding a sequence raises each column's ``rows - max count`` by 0 or 1,
    so the prefix cost never exceeds any completion's cost. A prefix whose
    cost reaches the incumbent is pruned; the incumbent was found earlier
    and therefore wins the lexicographic tie-break.
    """
    t, m, l = inst.t, inst.num_windows, inst.l
    sigma = len(inst.alphabet)
    windows = inst.windows.tolist()
    counts = [[0] * sigma for _ in range(l)]
    best_cost = t * l + 1
    best: tuple[int, ...] = ()
    path: list[int] = []
    nodes = 0

    def prefix_cost(depth: int) -> int:
        return sum(depth - max(col) for col in counts)

    def visit(depth: int) -> None:
        nonlocal best_cost, best, nodes
        for pos in range(m):
            nodes += 1
            w = windows[depth][pos]
            for c in range(l):
                counts[c][w[c]] += 1
            cost = prefix_cost(depth + 1)
            if cost < best_cost:
                path.append(pos)
                if depth + 1 == t:
                    best_cost, best = cost, tuple(path)
                else:
                    visit(depth + 1)
                path.pop()
            for c in range(l):
                counts[c][w[c]] -= 1

    visit(0)
    return best, nodes


def solve_exact_tuples(
    inst: Instance, *, budget: int | None = None, prune: bool = False, jobs: int = 1
) -> ExactResult:
    """Minimum consensus cost over every occurrence tuple.

    Ties go to the lexicographically smallest position tuple (sequence 0
    varies slowest). ``prune=True`` switches to branch and bound with an
    identical result.
    """
    total = inst.num_windows ** inst.t
    check_budget("occurrence tuples", total, budget)
    if prune:
        positions, nodes = _tuples_bnb(inst)
    else:
        tasks = split_prefixes((inst.num_windows,) * inst.t, jobs)
        parts = ordered_map(partial(_tuple_range, inst), tasks, jobs)
        _, flat = min(parts)
        positions = tuple(int(p) for p in np.unravel_index(flat, (inst.num_windows,) * inst.t))
        nodes = total
    costed = solution_cost(inst, Solution.from_positions(positions))
    return ExactResult(costed, nodes, costed.consensus)


def _pattern_range(inst: Instance, bounds: tuple[int, int]) -> tuple[int, int]:
    start, stop = bounds
    pats = product_block((len(inst.alphabet),) * inst.l, start, stop)
    costs = pattern_costs(inst, pats)
    k = int(np.argmin(costs))
    return int(costs[k]), start + k


def solve_exact_patterns(inst: Instance, *, budget: int | None = None, jobs: int = 1) -> ExactResult:
    """Minimum pattern cost over every string in ``alphabet^l``; ties go to the smallest string."""
    sigma = len(inst.alphabet)
    total = sigma ** inst.l
    check_budget("patterns", total, budget)
    parts = ordered_map(partial(_pattern_range, inst), split_range(total, jobs), jobs)
    cost, flat = min(parts)
    v = inst.decode(np.unravel_index(flat, (sigma,) * inst.l))
    aln = realign(inst, v)
    assert aln.cost == cost
    return ExactResult(aln.costed, total, v)
