"""Benchmark suites writing one CSV row per (instance, method).

Suites:

``reopt-vs-scratch``
    reoptimising scheme vs. the from-scratch scheme with the same ``r`` on the
    same merged instance, plus the greedy extension for reference.
``error-growth``
    additive gap of the greedy extension as ``k = 1..K`` sequences are added.
``ratio-sweep``
    from-scratch scheme cost over exact cost for several ``r``.

Only ``time_ns`` depends on the machine; every other column is a pure
function of the parameters and seeds.
"""
from __future__ import annotations

import csv
import io
import os
import time
from dataclasses import asdict, dataclass, fields
from typing import Callable

from .exact import solve_exact_tuples
from .fileio import serialize_instance, serialize_solution, write_text
from .generate import PlantedSpec, alphabet_of, gen_planted, gen_random, random_sequences
from .model import Instance
from .ptas import ptas_solve
from .reopt import ModifiedInstance, ReoptInput, k_best_align, reopt_ptas

CSV_FIELDS = ("instance", "method", "r", "k", "cost", "exact_cost", "ratio", "gap", "samples", "time_ns", "seed")
ABSENT = "NA"

EXAMPLE1_BASE = ("AAAABBBB", "BBBBAAAA", "AAAABBBA", "BBBBAAAA")
EXAMPLE1_ADDED = ("BBBBBBBB",)


@dataclass(frozen=True)
class BenchRecord:
    instance: str
    method: str
    r: int | None
    k: int | None
    cost: int
    exact_cost: int | None
    ratio: float | None
    gap: int | None
    samples: int | None
    time_ns: int | None
    seed: int | None

    def to_row(self) -> dict[str, str]:
        row = {}
        for key, val in asdict(self).items():
            if val is None:
                row[key] = ABSENT
            elif key == "ratio":
                row[key] = f"{val:.12g}"
            else:
                row[key] = str(val)
        return row

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "BenchRecord":
        kwargs = {}
        for f in fields(cls):
            raw = row[f.name]
            if raw == ABSENT:
                kwargs[f.name] = None
            elif f.name in ("instance", "method"):
                kwargs[f.name] = raw
            elif f.name == "ratio":
                kwargs[f.name] = float(raw)
            else:
                kwargs[f.name] = int(raw)
        return cls(**kwargs)


def make_record(instance, method, cost, exact_cost, *, r=None, k=None, samples=None, time_ns=None, seed=None, gap=None):
    ratio = cost / exact_cost if exact_cost else None
    if gap is None and exact_cost is not None:
        gap = cost - exact_cost
    return BenchRecord(instance, method, r, k, cost, exact_cost, ratio, gap, samples, time_ns, seed)


def write_csv(records, fh) -> None:
    writer = csv.DictWriter(fh, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for rec in records:
        writer.writerow(rec.to_row())


def read_csv(text: str) -> list[BenchRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_FIELDS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [BenchRecord.from_row(row) for row in reader]


def _timed(fn: Callable, *args, **kwargs):
    start = time.perf_counter_ns()
    out = fn(*args, **kwargs)
    return out, time.perf_counter_ns() - start


def _derived_seed(seed: int, salt: int) -> int:
    return (seed * 1_000_003 + salt) % 2**64


def reopt_case(family: str, seed: int, *, base_t: int, k: int, n: int, l: int, sigma=2, d: int = 1) -> ModifiedInstance:
    """Base of ``base_t`` sequences plus ``k`` new ones that are not in the base."""
    if family == "example1":
        return ModifiedInstance(Instance(EXAMPLE1_BASE, 4), EXAMPLE1_ADDED)
    alphabet = alphabet_of(sigma)
    for attempt in range(1000):
        s = _derived_seed(seed, attempt)
        if family == "random":
            base = gen_random(base_t, n, l, alphabet, s)
            added = random_sequences(k, n, alphabet, _derived_seed(s, 7))
        elif family == "planted":
            inst, _ = gen_planted(PlantedSpec(base_t + k, n, l, d, alphabet, s))
            base = Instance(inst.sequences[:base_t], l, alphabet)
            added = list(inst.sequences[base_t:])
        else:
            raise ValueError(f"unknown family {family!r}")
        if not set(added) & set(base.sequences):
            return ModifiedInstance(base, tuple(added))
    raise ValueError(f"could not draw {k} new sequences distinct from the base")


def _base_input(mod: ModifiedInstance) -> ReoptInput:
    opt = solve_exact_tuples(mod.base).costed
    return ReoptInput(mod, opt, verify=False)


@dataclass
class SuiteOutput:
    records: list[BenchRecord]
    counterexamples: list[tuple[str, str]]


def suite_reopt_vs_scratch(seeds, *, family="random", r=3, k=2, n=8, l=3, sigma=2, d=1, jobs=1) -> SuiteOutput:
    records, bad = [], []
    for seed in seeds:
        mod = reopt_case(family, seed, base_t=r, k=k, n=n, l=l, sigma=sigma, d=d)
        rr, kk = mod.base.t, mod.k
        name = f"{family}-{seed}"
        inp = _base_input(mod)
        exact = solve_exact_tuples(mod.merged, jobs=jobs).cost
        scratch, t1 = _timed(ptas_solve, mod.merged, rr, jobs=jobs)
        reopt, t4 = _timed(reopt_ptas, inp, jobs=jobs)
        greedy, tg = _timed(k_best_align, inp)
        for method, res, tns in (("ptas", scratch, t1), ("reopt-ptas", reopt, t4), ("k-best-align", greedy, tg)):
            records.append(
                make_record(name, method, res.cost, exact, r=rr, k=kk, samples=res.samples, time_ns=tns, seed=seed)
            )
        if reopt.cost != scratch.cost:
            text = (
                serialize_instance(mod.merged)
                + f"# base sequences: {rr}\n# ptas\n"
                + serialize_solution(scratch)
                + "# reopt-ptas\n"
                + serialize_solution(reopt)
            )
            bad.append((name, text))
    return SuiteOutput(records, bad)


def suite_error_growth(seeds, *, family="random", t=4, max_k=3, n=8, l=3, sigma=2, d=0, jobs=1) -> SuiteOutput:
    records = []
    for seed in seeds:
        full = reopt_case(family, seed, base_t=t, k=max_k, n=n, l=l, sigma=sigma, d=d)
        opt = solve_exact_tuples(full.base).costed
        for k in range(1, max_k + 1):
            mod = ModifiedInstance(full.base, full.added[:k])
            inp = ReoptInput(mod, opt, verify=False)
            res, tns = _timed(k_best_align, inp)
            exact = solve_exact_tuples(mod.merged, jobs=jobs).cost
            records.append(
                make_record(f"{family}-{seed}", "k-best-align", res.cost, exact, k=k, samples=res.samples, time_ns=tns, seed=seed)
            )
    return SuiteOutput(records, [])


def suite_ratio_sweep(seeds, *, rs=(3,), t=5, n=10, l=4, sigma=2, jobs=1) -> SuiteOutput:
    records = []
    for seed in seeds:
        inst = gen_random(t, n, l, sigma, seed)
        exact = solve_exact_tuples(inst, jobs=jobs).cost
        for r in rs:
            res, tns = _timed(ptas_solve, inst, r, jobs=jobs)
            records.append(
                make_record(f"random-{seed}", "ptas", res.cost, exact, r=r, samples=res.samples, time_ns=tns, seed=seed)
            )
    return SuiteOutput(records, [])


SUITES = {
    "reopt-vs-scratch": suite_reopt_vs_scratch,
    "error-growth": suite_error_growth,
    "ratio-sweep": suite_ratio_sweep,
}


def dump_counterexamples(items, directory) -> list[str]:
    paths = []
    if items:
        os.makedirs(directory, exist_ok=True)
    for name, text in items:
        path = os.path.join(directory, f"{name}.txt")
        write_text(path, text)
        paths.append(path)
    return paths
