"""Command-line entry point: ``cspreopt solve|reopt|bench|verify``.

Exit codes: 0 ok, 1 property failure, 2 input error, 3 candidate budget
exceeded, 4 base solution failed the optimality check.
"""
from __future__ import annotations

import argparse
import os
import sys
import time

from . import bench, verify
from ._enum import InstanceTooLarge
from .exact import solve_exact_patterns, solve_exact_tuples
from .fileio import parse_solution, read_instance, serialize_instance, serialize_solution, write_text
from .model import solution_cost
from .ptas import SAMPLE_MODES, ptas_solve
from .reopt import ModifiedInstance, OptVerificationError, ReoptInput, additive_gap, best_align, k_best_align, reopt_ptas

EXIT_OK, EXIT_PROPERTY, EXIT_INPUT, EXIT_BUDGET, EXIT_OPT = 0, 1, 2, 3, 4


def _emit_solution(result, out_path) -> None:
    text = serialize_solution(result)
    if out_path:
        write_text(out_path, text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    inst = read_instance(args.input, fasta=args.fasta, l=args.l)
    start = time.perf_counter_ns()
    if args.method == "exact":
        res = solve_exact_tuples(inst, jobs=args.jobs)
        result, samples = res.costed, res.nodes_explored
    elif args.method == "exact-patterns":
        res = solve_exact_patterns(inst, jobs=args.jobs)
        result, samples = res.costed, res.nodes_explored
    else:
        result = ptas_solve(inst, args.r, mode=args.samples, jobs=args.jobs)
        samples = result.samples
    elapsed = time.perf_counter_ns() - start
    _emit_solution(result, args.out)
    print(f"{args.method} {result.cost} {result.pattern} {elapsed} {samples}")
    return EXIT_OK


def cmd_reopt(args) -> int:
    base = read_instance(args.base)
    added = read_instance(args.added)
    if added.l != base.l:
        raise ValueError(f"added file has l={added.l}, base has l={base.l}")
    mod = ModifiedInstance(base, added.sequences)
    with open(args.opt, encoding="utf-8") as fh:
        stated = parse_solution(fh.read())
    opt = solution_cost(base, stated.solution)
    if (opt.cost, opt.consensus) != (stated.cost, stated.consensus):
        raise ValueError(
            f"solution file states cost={stated.cost} pattern={stated.consensus}, "
            f"occurrences give cost={opt.cost} pattern={opt.consensus}"
        )
    inp = ReoptInput(mod, opt, verify=not args.no_verify_opt)
    start = time.perf_counter_ns()
    if args.method == "best-align":
        res = best_align(inp)
    elif args.method == "k-best-align":
        res = k_best_align(inp)
    else:
        res = reopt_ptas(inp, mode=args.samples, jobs=args.jobs)
    elapsed = time.perf_counter_ns() - start
    try:
        gap, bound = additive_gap(inp, res)
        gap_s, bound_s = str(gap), str(bound)
    except InstanceTooLarge:
        gap_s, bound_s = bench.ABSENT, str(mod.k * base.l)
    _emit_solution(res, args.out)
    fields = [
        f"method={args.method}",
        f"cost={res.cost}",
        f"pattern={res.pattern}",
        f"branch={res.branch or '-'}",
        f"gap={gap_s}",
        f"bound={bound_s}",
        f"samples={res.samples}",
    ]
    if res.branch:
        fields += [f"cost_a={res.cost_a}", f"cost_b={res.cost_b}", f"realigned_a={res.realigned_a}"]
    fields.append(f"time_ns={elapsed}")
    print(" ".join(fields))
    return EXIT_OK


def cmd_bench(args) -> int:
    seeds = range(args.seed_start, args.seed_start + args.seeds)
    if args.suite == "reopt-vs-scratch":
        out = bench.suite_reopt_vs_scratch(
            seeds, family=args.family, r=args.r[0], k=args.k, n=args.n, l=args.l, sigma=args.sigma, d=args.d, jobs=args.jobs
        )
    elif args.suite == "error-growth":
        out = bench.suite_error_growth(
            seeds, family=args.family, t=args.t, max_k=args.k, n=args.n, l=args.l, sigma=args.sigma, d=args.d, jobs=args.jobs
        )
    else:
        out = bench.suite_ratio_sweep(seeds, rs=tuple(args.r), t=args.t, n=args.n, l=args.l, sigma=args.sigma, jobs=args.jobs)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        bench.write_csv(out.records, fh)
    if out.counterexamples:
        directory = args.counterexample_dir or args.out + ".counterexamples"
        paths = bench.dump_counterexamples(out.counterexamples, directory)
        print(f"{len(paths)} disagreement(s) written to {directory}", file=sys.stderr)
    agree = [r for r in out.records if r.method == "reopt-ptas"]
    if agree:
        print(f"reopt-ptas agrees with ptas on {len(agree) - len(out.counterexamples)}/{len(agree)} instances")
    print(f"{len(out.records)} rows written to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    status = EXIT_OK
    for prop, cases, found in verify.run(args.suite, range(args.seeds)):
        if found is None:
            print(f"PASS {prop.suite}/{prop.name} ({cases} seeds)")
            continue
        status = EXIT_PROPERTY
        os.makedirs(args.counterexample_dir, exist_ok=True)
        path = os.path.join(args.counterexample_dir, f"counterexample-{prop.name}.txt")
        write_text(path, serialize_instance(found))
        print(f"FAIL {prop.suite}/{prop.name}: counterexample in {path}")
    return status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cspreopt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--method", choices=("exact", "exact-patterns", "ptas"), default="exact")
    p.add_argument("--r", type=int, default=3)
    p.add_argument("--samples", choices=SAMPLE_MODES, default="distinct-seq")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.add_argument("--fasta", action="store_true", help="read FASTA records (needs --l)")
    p.add_argument("--l", type=int, help="pattern length for FASTA input")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reopt", help="reoptimise after adding sequences")
    p.add_argument("--base", required=True)
    p.add_argument("--added", required=True)
    p.add_argument("--opt", required=True, help="solution file of the base instance")
    p.add_argument("--method", choices=("best-align", "k-best-align", "reopt-ptas"), default="k-best-align")
    p.add_argument("--no-verify-opt", action="store_true")
    p.add_argument("--samples", choices=SAMPLE_MODES, default="distinct-seq")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reopt)

    p = sub.add_parser("bench", help="run a benchmark suite and write CSV")
    p.add_argument("--suite", choices=tuple(bench.SUITES), required=True)
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--seed-start", type=int, default=0)
    p.add_argument("--out", required=True)
    p.add_argument("--family", choices=("random", "planted", "example1"), default="random")
    p.add_argument("--r", type=int, nargs="+", default=[3])
    p.add_argument("--k", type=int, default=2, help="added sequences (max k for error-growth)")
    p.add_argument("--t", type=int, default=4)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--l", type=int, default=3)
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--d", type=int, default=1, help="mutations per planted copy")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--counterexample-dir")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("--suite", choices=("all", "oracles", "bounds", "self-reducibility"), default="all")
    p.add_argument("--seeds", type=int, default=20)
    p.add_argument("--counterexample-dir", default=".")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OptVerificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OPT
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
