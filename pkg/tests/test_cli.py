import json
import subprocess
import sys

import pytest

from plab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_cycle_example(capsys):
    code, out, _ = run(capsys, "solve", "--family", "cycle", "--n", "5", "--rule", "fully-active", "--max-cops", "3")
    assert code == 0 and out.strip() == "2"


def test_solve_hypercube_example(capsys):
    code, out, _ = run(capsys, "solve", "--family", "hypercube", "--n", "4", "--rule", "fully-active",
                       "--max-cops", "4")
    assert code == 0 and out.strip() == "3"


def test_solve_reports_unknown_above_bound(capsys):
    code, out, _ = run(capsys, "solve", "--family", "petersen", "--rule", "passive", "--max-cops", "2")
    assert code == 0 and out.strip() == ">2"


def test_solve_fixed_cops_and_export(capsys, tmp_path):
    dest = tmp_path / "t.json"
    code, out, _ = run(capsys, "solve", "--family", "cycle", "--n", "6", "--cops", "1", "--export", str(dest),
                       "--cache-dir", str(tmp_path / "c"))
    assert code == 0 and out.strip() == "robber-win"
    assert json.loads(dest.read_text())["k"] == 1
    code, out, _ = run(capsys, "cache", "ls", "--cache-dir", str(tmp_path / "c"))
    assert code == 0 and out.count(".plab") == 1
    code, out, _ = run(capsys, "cache", "rm", "--cache-dir", str(tmp_path / "c"))
    assert code == 0 and "removed 1" in out


def test_graph_build_and_convert(capsys, tmp_path):
    js = tmp_path / "g.json"
    code, _, _ = run(capsys, "graph", "build", "--family", "product", "--factors", "C3,P2", "--out", str(js))
    assert code == 0
    el = tmp_path / "g.txt"
    assert run(capsys, "graph", "convert", str(js), str(el))[0] == 0
    code, out, _ = run(capsys, "solve", "--graph", str(el), "--max-cops", "3")
    assert code == 0 and out.strip().isdigit()
    code, out, _ = run(capsys, "graph", "build", "--family", "vab", "--n", "2", "--m", "2")
    assert json.loads(out)["n"] == 5


@pytest.mark.parametrize("argv", [
    ["solve", "--family", "cycle", "--max-cops", "2"],
    ["solve", "--family", "cycle", "--n", "5", "--rule", "sleepy", "--cops", "1"],
    ["solve", "--family", "cycle", "--n", "5"],
    ["solve", "--graph", "/nonexistent/file.json", "--cops", "1"],
    ["arena", "verify-cop", "--family", "cycle", "--n", "5", "--cop", "bogus"],
    ["arena", "verify-cop", "--family", "cycle", "--n", "5", "--cop", "optimal:k"],
    ["arena", "verify-cop", "--family", "cycle", "--n", "5", "--cop", "tree-product"],
    ["arena", "verify-robber", "--family", "cycle", "--n", "5"],
    ["verify", "--suite", "other"],
    ["graph", "convert"],
    ["frobnicate"],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.strip()


def test_malformed_graph_file(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("0 1\n1 two\n")
    code, _, err = run(capsys, "solve", "--graph", str(bad), "--cops", "1")
    assert code == 2 and "line 2" in err


def test_arena_verify_cop_and_counterexample(capsys, tmp_path):
    code, out, _ = run(capsys, "arena", "verify-cop", "--family", "product", "--factors", "P3,P4",
                       "--cop", "tree-product")
    assert code == 0 and out.startswith("Verified")
    code, out, _ = run(capsys, "arena", "verify-cop", "--family", "cycle", "--n", "6", "--cop", "optimal:k=1",
                       "--artifacts-dir", str(tmp_path))
    assert code == 1 and out.startswith("Counterexample")
    assert list(tmp_path.glob("*.json"))


def test_arena_named_controllers(capsys):
    code, out, _ = run(capsys, "arena", "verify-cop", "--family", "random-outerplanar", "--n", "9", "--seed", "2",
                       "--cop", "outerplanar")
    assert code == 0
    code, out, _ = run(capsys, "arena", "verify-cop", "--family", "cycle", "--n", "5",
                       "--cop", "doubling")
    assert code == 0
    code, out, _ = run(capsys, "arena", "verify-cop", "--family", "petersen", "--rule", "passive",
                       "--cop", "shadow")
    assert code == 0
    code, out, _ = run(capsys, "arena", "verify-cop", "--family", "product", "--factors", "C3,C3",
                       "--cop", "odd-cycle-product")
    assert code == 0
    code, out, _ = run(capsys, "arena", "verify-robber", "--family", "product", "--factors", "P3,P3,P3",
                       "--robber", "tree-product-robber", "--cops", "1")
    assert code == 0


def test_arena_play(capsys):
    code, out, _ = run(capsys, "arena", "play", "--family", "cycle", "--n", "5", "--cop", "optimal:rule=fully-active,k=2",
                       "--robber", "optimal")
    assert code == 0 and out.startswith("CAPTURE")
    code, out, _ = run(capsys, "arena", "play", "--family", "cycle", "--n", "6", "--cop", "optimal:k=1",
                       "--robber", "optimal", "--rounds", "12", "--json")
    assert code == 1 and json.loads(out)["outcome"] == "SURVIVED"


def test_verify_suite_subset(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--suite", "paper", "--only", "3,13", "--out", str(tmp_path), "--quiet")
    assert code == 0 and out.startswith("PASS")
    assert {p.name for p in tmp_path.iterdir()} >= {"report.md", "report.csv", "report.json", "timings.json"}


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "plab", "--version"], capture_output=True, text=True)
    assert res.returncode == 0 and "plab" in res.stdout
