"""Reoptimisation after sequences are appended to a solved instance.

Given an optimal solution of the base sequences, :func:`k_best_align` keeps it
and attaches the closest window of every new sequence to the base consensus.
Its cost is the base cost plus the new distances, so it is at most ``k * l``
above the new optimum.

:func:`reopt_ptas` runs the r-sampling scheme on the merged instance with a
base of exactly ``r`` sequences. Samples that lie entirely inside the base
are replaced by the single greedy extension above, which saves
``C(r, r) * (n - l + 1)^r - 1`` candidate evaluations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .exact import solve_exact_tuples
from .model import (
    CostedSolution,
    Instance,
    Pattern,
    Solution,
    best_occurrence,
    check_solution,
    pattern_cost,
    solution_cost,
)
from .ptas import SAMPLE_MODES, sweep_samples


class OptVerificationError(ValueError):
    """The supplied base solution is not optimal for the base instance."""


@dataclass(frozen=True)
class ModifiedInstance:
    """A base instance plus ``k >= 1`` appended sequences."""

    base: Instance
    added: tuple[str, ...]
    allow_duplicates: bool = False

    def __post_init__(self):
        added = tuple(self.added)
        object.__setattr__(self, "added", added)
        if not added:
            raise ValueError("at least one sequence must be added")
        for s in added:
            if len(s) != self.base.n:
                raise ValueError(f"added sequence has length {len(s)}, expected {self.base.n}")
            if not self.allow_duplicates and s in self.base.sequences:
                raise ValueError(f"added sequence {s!r} is already in the base instance")
        self.merged  # validates symbols

    @property
    def k(self) -> int:
        return len(self.added)

    @cached_property
    def merged(self) -> Instance:
        return self.base.with_sequences(self.added)


@dataclass(frozen=True)
class ReoptInput:
    """Modified instance and the base solution it starts from.

    With ``verify=True`` the base solution is checked against the exhaustive
    oracle and :class:`OptVerificationError` is raised if it is not optimal.
    """

    modified: ModifiedInstance
    base_opt: CostedSolution
    verify: bool = True

    def __post_init__(self):
        base = self.modified.base
        check_solution(base, self.base_opt.solution)
        recomputed = solution_cost(base, self.base_opt.solution)
        if recomputed.cost != self.base_opt.cost or recomputed.consensus != self.base_opt.consensus:
            raise ValueError(
                f"base solution states cost {self.base_opt.cost} / {self.base_opt.consensus}, "
                f"recomputed {recomputed.cost} / {recomputed.consensus}"
            )
        if self.verify:
            best = solve_exact_tuples(base).cost
            if self.base_opt.cost != best:
                raise OptVerificationError(
                    f"base solution costs {self.base_opt.cost} but the optimum is {best}"
                )


@dataclass(frozen=True)
class ReoptResult:
    """A solution of the merged instance scored against ``pattern``.

    ``costed`` re-scores the same windows against their own consensus. For
    :func:`reopt_ptas`, ``branch`` names the winner (``SOL_A`` is the greedy
    extension, ``SOL_B`` the best fresh sample) and ``cost_a``/``cost_b``
    hold both candidates; ``realigned_a`` is the pattern cost of the base
    consensus realigned over every sequence.
    """

    pattern: Pattern
    solution: Solution
    cost: int
    costed: CostedSolution
    samples: int
    branch: str | None = None
    cost_a: int | None = None
    cost_b: int | None = None
    realigned_a: int | None = None


def k_best_align(inp: ReoptInput) -> ReoptResult:
    mod = inp.modified
    merged = mod.merged
    v = inp.base_opt.consensus
    t = mod.base.t
    positions, extra = [], 0
    for j in range(mod.k):
        occ, d = best_occurrence(merged, v, t + j)
        positions.append(occ.position)
        extra += d
    sol = inp.base_opt.solution.extend(positions)
    return ReoptResult(v, sol, inp.base_opt.cost + extra, solution_cost(merged, sol), samples=1)


def best_align(inp: ReoptInput) -> ReoptResult:
    if inp.modified.k != 1:
        raise ValueError(f"best_align handles one added sequence, got {inp.modified.k}")
    return k_best_align(inp)


def reopt_ptas(inp: ReoptInput, *, mode: str = "distinct-seq", jobs: int = 1) -> ReoptResult:
    """Sampling scheme on the merged instance with ``r`` equal to the base size.

    Ties between the greedy extension and the best fresh sample go to the
    extension.
    """
    if mode not in SAMPLE_MODES:
        raise ValueError(f"unknown sample mode {mode!r}")
    mod = inp.modified
    merged = mod.merged
    r = mod.base.t
    a = k_best_align(inp)
    sweep = sweep_samples(merged, r, mode=mode, skip_within=r, jobs=jobs)
    realigned_a = pattern_cost(merged, a.pattern)
    samples = sweep.samples + 1
    extra = dict(cost_a=a.cost, cost_b=sweep.cost, realigned_a=realigned_a)
    if sweep.alignment is None or a.cost <= sweep.alignment.cost:
        return ReoptResult(a.pattern, a.solution, a.cost, a.costed, samples, "SOL_A", **extra)
    b = sweep.alignment
    return ReoptResult(b.pattern, b.solution, b.cost, b.costed, samples, "SOL_B", **extra)


def additive_gap(inp: ReoptInput, sol, *, budget: int | None = None) -> tuple[int, int]:
    """``(sol.cost - optimum of the merged instance, k * l)``."""
    mod = inp.modified
    best = solve_exact_tuples(mod.merged, budget=budget).cost
    return sol.cost - best, mod.k * mod.base.l
