"""Seeded property suites used by ``cspreopt verify``.

Each check returns ``None`` on success or a counterexample instance.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable

import numpy as np

from .exact import solve_exact_patterns, solve_exact_tuples
from .generate import gen_random, random_sequences
from .model import Instance, Solution, decompose_cost, hamming, solution_cost, substring_at
from .ptas import ptas_solve, ratio_bound
from .reopt import ModifiedInstance, ReoptInput, best_align, k_best_align, reopt_ptas


def _draw_shape(seed: int, *, sigma=(2, 3), t=(1, 5), n=(4, 10), l=(1, 4)) -> tuple[int, int, int, int]:
    rng = np.random.Generator(np.random.PCG64(seed))
    s = int(rng.integers(sigma[0], sigma[1] + 1))
    tt = int(rng.integers(t[0], t[1] + 1))
    nn = int(rng.integers(n[0], n[1] + 1))
    ll = int(rng.integers(l[0], min(l[1], nn) + 1))
    return s, tt, nn, ll


def random_small(seed: int, **ranges) -> Instance:
    s, t, n, l = _draw_shape(seed, **ranges)
    return gen_random(t, n, l, s, seed)


def random_solution(inst: Instance, seed: int) -> Solution:
    rng = np.random.Generator(np.random.PCG64(seed))
    return Solution.from_positions(rng.integers(0, inst.num_windows, size=inst.t).tolist())


def random_modified(seed: int, base_t: int, k: int, *, sigma=2, n=8, l=3) -> ModifiedInstance:
    for attempt in range(1000):
        s = seed * 7919 + attempt
        base = gen_random(base_t, n, l, sigma, s)
        added = random_sequences(k, n, sigma, s + 2**40)
        if not set(added) & set(base.sequences):
            return ModifiedInstance(base, tuple(added))
    raise RuntimeError("could not draw distinct added sequences")


def check_oracles(seed: int):
    inst = random_small(seed)
    full = solve_exact_tuples(inst)
    if full.cost != solve_exact_patterns(inst).cost:
        return inst
    if solve_exact_tuples(inst, prune=True).costed != full.costed:
        return inst
    return None


def check_decomposition(seed: int):
    inst = random_small(seed)
    sol = random_solution(inst, seed)
    total = solution_cost(inst, sol).cost
    for i in range(inst.t):
        partial, leaf = decompose_cost(inst, sol, i)
        if partial + leaf != total:
            return inst
    return None


def check_extension_identity(seed: int):
    mod = random_modified(seed, 3, 1)
    opt = solve_exact_tuples(mod.base).costed
    res = best_align(ReoptInput(mod, opt, verify=False))
    y = substring_at(mod.merged, res.solution.occurrences[-1])
    if res.cost != opt.cost + hamming(opt.consensus, y):
        return mod.merged
    return None


def check_ptas_ratio(seed: int):
    inst = random_small(seed, sigma=(2, 4), t=(4, 6), n=(8, 10), l=(3, 4))
    exact = solve_exact_tuples(inst).cost
    cost = ptas_solve(inst, 3).cost
    if not exact <= cost <= ratio_bound(3, max(2, len(inst.alphabet))) * exact:
        return inst
    return None


def check_additive(seed: int):
    k = 1 + seed % 3
    mod = random_modified(seed, 3, k)
    inp = ReoptInput(mod, solve_exact_tuples(mod.base).costed, verify=False)
    greedy = k_best_align(inp)
    exact = solve_exact_tuples(mod.merged).cost
    if greedy.cost - exact > k * mod.base.l:
        return mod.merged
    return None


def check_reopt_ptas(seed: int):
    r = 3 + seed % 2
    mod = random_modified(seed, r, 1 + seed % 2)
    inp = ReoptInput(mod, solve_exact_tuples(mod.base).costed, verify=False)
    res = reopt_ptas(inp)
    exact = solve_exact_tuples(mod.merged).cost
    if res.cost > k_best_align(inp).cost or res.cost > ratio_bound(r, 2) * exact:
        return mod.merged
    expected = math.comb(mod.merged.t, r) * mod.merged.num_windows**r - mod.merged.num_windows**r + 1
    if res.samples != expected:
        return mod.merged
    return None


@dataclass(frozen=True)
class Property:
    suite: str
    name: str
    check: Callable[[int], Instance | None]


PROPERTIES = (
    Property("oracles", "tuple-vs-pattern-oracle", check_oracles),
    Property("self-reducibility", "decompose-cost-identity", check_decomposition),
    Property("self-reducibility", "best-align-cost-identity", check_extension_identity),
    Property("bounds", "ptas-ratio-r3", check_ptas_ratio),
    Property("bounds", "k-best-align-additive", check_additive),
    Property("bounds", "reopt-ptas-dominance-ratio", check_reopt_ptas),
)


def run(suite: str, seeds: Iterable[int]) -> list[tuple[Property, int, Instance | None]]:
    """``(property, cases run, first counterexample or None)`` per selected property."""
    seeds = list(seeds)
    out = []
    for prop in PROPERTIES:
        if suite not in ("all", prop.suite):
            continue
        found = None
        for seed in seeds:
            found = prop.check(seed)
            if found is not None:
                break
        out.append((prop, len(seeds), found))
    return out
