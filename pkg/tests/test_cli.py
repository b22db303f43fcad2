import subprocess
import sys

import pytest

from shelflist.cli import EXIT_INVALID, EXIT_OK, EXIT_TOO_LARGE, run_cli
from shelflist.formats import parse_instance

INSTANCE = """\
shelflist v1
product a 1
product b 2
product c 7
buyer x sc L
beats a b
beats b c
beats c a
buyer y sc L
beats a b
beats b c
beats c a
target 14
"""

SAT_SOURCE = "betweenness v1\nU u1 u2\nV v1\nW w\nC u1 v1 u2\nD v1 u1\n"
UNSAT_SOURCE = "betweenness v1\nU u1 u2\nV v1\nW w\nC u1 v1 u2\nD v1 u1\nD v1 u2\n"


@pytest.fixture
def files(tmp_path):
    paths = {}
    for key, text in (("inst", INSTANCE), ("sat", SAT_SOURCE), ("unsat", UNSAT_SOURCE)):
        paths[key] = tmp_path / f"{key}.txt"
        paths[key].write_text(text)
    return {k: str(v) for k, v in paths.items()}


def run(capsys, *argv):
    code = run_cli(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_auto(files, capsys):
    code, out, _ = run(capsys, "solve", files["inst"])
    assert code == EXIT_OK
    assert out.splitlines() == ["decision=yes", "best_value=14", "method=sepa-sc-t3", "list=a,b,c"]


@pytest.mark.parametrize("extra", [[], ["--prune"], ["--stop-at-target"], ["--workers", "2"]])
def test_solve_exact_variants(files, capsys, extra):
    code, out, _ = run(capsys, "solve", files["inst"], "--method", "exact", *extra)
    assert code == EXIT_OK
    assert "decision=yes" in out and "best_value=14" in out and "method=exact" in out


def test_solve_target_override(files, capsys):
    _, out, _ = run(capsys, "solve", files["inst"], "--target", "15")
    assert "decision=no" in out


def test_solve_not_applicable(files, capsys):
    code, _, err = run(capsys, "solve", files["inst"], "--method", "rc")
    assert code == EXIT_INVALID and err.startswith("error:")


def test_solve_too_large(tmp_path, capsys):
    lines = ["shelflist v1"] + [f"product p{i} 1" for i in range(11)]
    lines += ["buyer x sc L", "rank " + " ".join(f"p{i}" for i in range(11))]
    path = tmp_path / "big.txt"
    path.write_text("\n".join(lines) + "\n")
    code, _, _ = run(capsys, "solve", str(path), "--method", "exact")
    assert code == EXIT_TOO_LARGE


def test_evaluate(files, capsys):
    code, out, _ = run(capsys, "evaluate", files["inst"], "--list", "c,b,a")
    assert code == EXIT_OK
    assert out.splitlines() == ["decision=no", "value=2", "list=c,b,a"]


def test_invalid_input(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("shelflist v1\nproduct a 1\nproduct b 1\nproduct c 1\nbuyer x sc L\nbeats a b\nbeats b c\n")
    code, _, err = run(capsys, "solve", str(path))
    assert code == EXIT_INVALID
    assert "unoriented" in err
    code, _, err = run(capsys, "solve", str(tmp_path / "missing.txt"))
    assert code == EXIT_INVALID


def test_reduce_sepa_sc(files, capsys):
    code, out, _ = run(capsys, "reduce", files["sat"], "--target", "sepa-sc")
    assert code == EXIT_OK
    assert "target 593" in out.splitlines()
    inst = parse_instance(out)
    assert inst.m == 18


def test_reduce_to_file(files, tmp_path, capsys):
    dest = tmp_path / "out.txt"
    assert run(capsys, "reduce", files["sat"], "--target", "pa-sat", "-o", str(dest))[0] == EXIT_OK
    assert parse_instance(dest.read_text()).target.micros == 7 * 10**6


def test_check_betweenness(files, capsys):
    code, out, _ = run(capsys, "check-betweenness", files["sat"])
    assert code == EXIT_OK and out.startswith("satisfiable=yes\norder=")
    _, out, _ = run(capsys, "check-betweenness", files["unsat"])
    assert out == "satisfiable=no\norder=-\n"


def test_verify_gadgets(capsys):
    code, out, _ = run(capsys, "verify-gadgets")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[-1] == "mismatches=0"
    assert sum(line.startswith("role=") for line in lines) == 8


@pytest.mark.parametrize("target", ["pa-sat", "pa-sc", "sepa-sc"])
def test_verify_reduction(files, capsys, target):
    for key in ("sat", "unsat"):
        code, out, _ = run(capsys, "verify-reduction", files[key], "--target", target)
        assert code == EXIT_OK, out
        assert "equivalent=yes" in out


def test_gen_random_deterministic(capsys):
    args = ("gen-random", "--n", "5", "--m", "3", "--tc-size", "3", "--seed", "4")
    first, second = run(capsys, *args)[1], run(capsys, *args)[1]
    assert first == second
    assert parse_instance(first).n == 5


def test_gen_random_infeasible(capsys):
    code, _, err = run(capsys, "gen-random", "--n", "2", "--m", "1", "--tc-size", "3")
    assert code == EXIT_INVALID and "error:" in err


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "--methods", "rc", "--n", "4", "--m", "2", "--reps", "1", "--csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "n,m,method,t_us" and lines[1].startswith("4,2,rc,")


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "shelflist", "solve", files["inst"]],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "best_value=14" in proc.stdout
