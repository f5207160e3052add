import shutil
import subprocess
import sys

import pytest

import oracles
from cspreopt import ratio_bound, solve_exact_tuples
from cspreopt.bench import reopt_case
from cspreopt.bench import read_csv
from cspreopt.cli import main

EX1_TEXT = "l=4\nAAAABBBB\nBBBBAAAA\nAAAABBBA\nBBBBAAAA\n"
EX1P_TEXT = EX1_TEXT + "BBBBBBBB\n"
OPT_TEXT = "cost=0\npattern=AAAA\nocc 0 0\nocc 1 4\nocc 2 0\nocc 3 4\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in {
        "ex1": EX1_TEXT,
        "ex1p": EX1P_TEXT,
        "added": "l=4\nBBBBBBBB\n",
        "opt": OPT_TEXT,
        "badopt": "cost=8\npattern=AAAA\nocc 0 0\nocc 1 0\nocc 2 0\nocc 3 0\n",
        "lying": "cost=0\npattern=AAAA\nocc 0 0\nocc 1 0\nocc 2 0\nocc 3 0\n",
        "ragged": "l=2\nAAAA\nAAA\n",
    }.items():
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def fields(line):
    return dict(part.split("=", 1) for part in line.split())


def test_solve_exact(files, capsys, tmp_path):
    out = tmp_path / "sol.txt"
    assert main(["solve", "--input", files["ex1p"], "--method", "exact", "--out", str(out)]) == 0
    method, cost, pattern, _, samples = capsys.readouterr().out.split()
    assert (method, cost, pattern, samples) == ("exact", "1", "BBBB", str(5**5))
    assert out.read_text() == "cost=1\npattern=BBBB\nocc 0 4\nocc 1 0\nocc 2 3\nocc 3 0\nocc 4 0\n"


def test_solve_ptas_to_stdout(files, capsys):
    assert main(["solve", "--input", files["ex1"], "--method", "ptas", "--r", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "cost=0"
    assert lines[-1].split()[:3] == ["ptas", "0", "AAAA"]
    assert lines[-1].split()[-1] == str(5**4)


def test_solve_exact_patterns_and_fasta(tmp_path, capsys):
    fa = tmp_path / "in.fa"
    fa.write_text(">a\nAAAABBBB\n>b\nBBBBAAAA\n>c\nAAAABBBA\n>d\nBBBB\nAAAA\n>e\nBBBBBBBB\n")
    assert main(["solve", "--input", str(fa), "--fasta", "--l", "4", "--method", "exact-patterns", "--out", str(tmp_path / "s")]) == 0
    assert capsys.readouterr().out.split()[1:3] == ["1", "BBBB"]


def test_input_errors(files, capsys, tmp_path):
    assert main(["solve", "--input", files["ragged"]]) == 2
    assert "line 3" in capsys.readouterr().err
    assert main(["solve", "--input", str(tmp_path / "missing.txt")]) == 2
    assert main(["solve", "--input", files["ex1"], "--method", "ptas", "--r", "5"]) == 2


def test_budget_exit_code(files, capsys, monkeypatch):
    monkeypatch.setenv("CSP_BUDGET", "100")
    assert main(["solve", "--input", files["ex1"]]) == 3
    assert "625" in capsys.readouterr().err


def test_reopt_best_align(files, capsys, tmp_path):
    args = ["reopt", "--base", files["ex1"], "--added", files["added"], "--opt", files["opt"], "--out", str(tmp_path / "o")]
    assert main(args + ["--method", "best-align"]) == 0
    f = fields(capsys.readouterr().out)
    assert (f["cost"], f["pattern"], f["gap"], f["bound"], f["branch"]) == ("4", "AAAA", "3", "4", "-")


def test_reopt_ptas(files, capsys, tmp_path):
    args = ["reopt", "--base", files["ex1"], "--added", files["added"], "--opt", files["opt"], "--out", str(tmp_path / "o")]
    assert main(args + ["--method", "reopt-ptas"]) == 0
    f = fields(capsys.readouterr().out)
    assert (f["cost"], f["pattern"], f["branch"], f["samples"]) == ("1", "BBBB", "SOL_B", "2501")
    assert (f["cost_a"], f["cost_b"], f["realigned_a"]) == ("4", "1", "4")


def test_reopt_rejects_bad_opt(files, capsys):
    base = ["reopt", "--base", files["ex1"], "--added", files["added"]]
    assert main(base + ["--opt", files["badopt"]]) == 4
    assert main(base + ["--opt", files["badopt"], "--no-verify-opt"]) == 0
    capsys.readouterr()
    assert main(base + ["--opt", files["lying"]]) == 2
    assert "states cost=0" in capsys.readouterr().err


def test_reopt_rejects_duplicate_added(files):
    assert main(["reopt", "--base", files["ex1"], "--added", files["ex1"], "--opt", files["opt"]]) == 2


def test_bench_reopt_vs_scratch_example(tmp_path, capsys):
    out = tmp_path / "b.csv"
    assert main(["bench", "--suite", "reopt-vs-scratch", "--family", "example1", "--seeds", "1", "--r", "4", "--out", str(out)]) == 0
    assert "agrees with ptas on 1/1" in capsys.readouterr().out
    recs = {r.method: r for r in read_csv(out.read_text())}
    assert recs["ptas"].samples == 3125
    assert recs["reopt-ptas"].samples == 2501
    assert recs["ptas"].cost == recs["reopt-ptas"].cost == recs["ptas"].exact_cost == 1


def test_bench_error_growth_planted(tmp_path):
    out = tmp_path / "g.csv"
    args = ["bench", "--suite", "error-growth", "--family", "planted", "--d", "0", "--seeds", "6", "--k", "3", "--out", str(out)]
    assert main(args) == 0
    recs = read_csv(out.read_text())
    assert len(recs) == 18
    assert all(r.exact_cost == 0 for r in recs)
    zero_gap = 0
    for rec in recs:
        mod = reopt_case("planted", rec.seed, base_t=4, k=3, n=8, l=3, d=0)
        v = solve_exact_tuples(mod.base).pattern
        # the extension keeps the base consensus, so the gap is its distance to the new windows
        assert rec.gap == sum(oracles.min_window_distance(v, s) for s in mod.added[: rec.k])
        if all(v in s for s in mod.added[: rec.k]):
            assert rec.gap == 0
            zero_gap += 1
    assert zero_gap > 0


def test_bench_ratio_sweep(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["bench", "--suite", "ratio-sweep", "--seeds", "4", "--r", "3", "4", "--t", "4", "--out", str(out)]) == 0
    recs = read_csv(out.read_text())
    assert len(recs) == 8
    for rec in recs:
        assert rec.cost >= rec.exact_cost
        if rec.exact_cost:
            assert rec.ratio <= ratio_bound(rec.r, 2)


def _strip_time(text):
    lines = text.splitlines()
    col = lines[0].split(",").index("time_ns")
    return [[c for i, c in enumerate(line.split(",")) if i != col] for line in lines]


def test_bench_deterministic_across_runs_and_jobs(tmp_path, capsys):
    outputs = []
    for i, jobs in enumerate(("1", "1", "4")):
        out = tmp_path / f"d{i}.csv"
        args = ["bench", "--suite", "reopt-vs-scratch", "--seeds", "3", "--r", "3", "--n", "7", "--jobs", jobs, "--out", str(out)]
        assert main(args) == 0
        outputs.append(_strip_time(out.read_text()))
    assert outputs[0] == outputs[1] == outputs[2]


def test_verify_passes(capsys):
    assert main(["verify", "--seeds", "4"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_console_script():
    exe = shutil.which("cspreopt")
    cmd = [exe] if exe else [sys.executable, "-m", "cspreopt.cli"]
    proc = subprocess.run(cmd + ["--help"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "solve" in proc.stdout and "reopt" in proc.stdout
