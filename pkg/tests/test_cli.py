import csv
import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest

import oracle
from zagier.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_polynomial(capsys):
    assert run(capsys, "compute", "zagier", "1") == (0, "coeffs: [3/4, 1/2]\n", "")


def test_compute_value(capsys):
    code, out, _ = run(capsys, "compute", "zagier", "1", "--at", "0")
    assert (code, out) == (0, "3/4\n")
    code, out, _ = run(capsys, "compute", "zagier", "4", "--at", "1/2")
    assert Fraction(out.strip()) == oracle.zagier_poly(4)(Fraction(1, 2))


def test_compute_bernoulli_zero(capsys):
    assert run(capsys, "compute", "bernoulli", "0")[1] == "coeffs: [1]\n"
    assert run(capsys, "compute", "bernoulli", "1", "--at", "0")[1] == "-1/2\n"


def test_compute_json_round_trips(capsys):
    code, out, _ = run(capsys, "compute", "zagier", "9", "--format", "json")
    (record,) = json.loads(out)
    assert record["kind"] == "polynomial"
    assert [Fraction(c) for c in record["payload"]] == list(oracle.zagier_poly(9).coeffs)


def test_compute_gegenbauer(capsys):
    assert run(capsys, "compute", "gegenbauer", "3", "--lam", "2")[1] == "coeffs: [0, -12, 0, 32]\n"
    assert run(capsys, "compute", "gegenbauer", "3")[0] == 2


@pytest.mark.parametrize(
    "argv",
    [
        ("compute", "zagier", "0"),
        ("compute", "mod_euler", "-2"),
        ("compute", "zagier", "2", "--at", "1/0"),
        ("compute", "nosuch", "2"),
        ("verify", "nosuch"),
        ("classify", "--x2", "3", "--even"),
        ("classify", "--x2", "0", "--nmax", "20"),
        ("table", "alpha", "--nmax", "0"),
        (),
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:  # argparse rejections
        code = exc.code
    assert code == 2


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "period6", "--nmax", "60")
    assert code == 0 and out.startswith("PASS period6")


@pytest.mark.parametrize("theorem", ["symmetry", "duplication", "gegenbauer", "corollaries", "alpha"])
def test_verify_small_depth(capsys, theorem):
    assert run(capsys, "verify", theorem, "--nmax", "8")[0] == 0


def test_verify_violation_exits_1(capsys):
    # the log-concavity conjecture probe has a counterexample at n = 31
    code, out, _ = run(capsys, "verify", "logconcavity", "--nmax", "32", "--format", "json")
    (record,) = json.loads(out)
    assert code == 1 and record["payload"]["ok"] is False
    assert record["payload"]["counterexample"][0] == 31
    assert record["metadata"]["n_max_tested"] == 32


def test_classify_examples(capsys):
    d = json.loads(run(capsys, "classify", "--x2", "0")[1])
    assert (d["verdict"], d["period"]) == ("Periodic", 6)
    d = json.loads(run(capsys, "classify", "--x2", "-3")[1])
    assert d["verdict"] == "IdenticallyZero"
    d = json.loads(run(capsys, "classify", "--x2", "-8")[1])
    assert (d["verdict"], d["slope"], d["period"]) == ("DriftPeriodic", "-1", 6)
    d = json.loads(run(capsys, "classify", "--x2", "4", "--even", "--nmax", "36")[1])
    assert (d["verdict"], d["cycle"]) == ("Periodic", ["1/2", "-1/2", "0"])


def test_table_alpha_csv(capsys):
    code, out, _ = run(capsys, "table", "alpha", "--nmax", "6")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "alpha", "alpha_over_4"]
    assert rows[1:] == [["1", "4", ""], ["2", "24", "6"], ["3", "4", ""], ["4", "80", "20"], ["5", "4", ""], ["6", "1260", "315"]]


def test_table_gf_coeffs_json(tmp_path, capsys):
    path = tmp_path / "gf.json"
    assert run(capsys, "table", "gf_coeffs", "--nmax", "12", "--format", "json", "--out", str(path))[0] == 0
    records = json.loads(path.read_text())
    coeffs = [Fraction(r["payload"]["coefficient"]) for r in records]
    assert coeffs == [oracle.zagier_poly(k)(0) if k % 2 else 0 for k in range(13)]
    assert all(r["kind"] == "value" for r in records)


def test_table_roots_and_stats(capsys):
    rows = list(csv.DictReader(io.StringIO(run(capsys, "table", "roots", "--nmax", "4")[1])))
    assert len(rows) == 1 + 2 + 3 + 4
    assert all(float(r["residual"]) < 1e-20 for r in rows)
    rows = list(csv.DictReader(io.StringIO(run(capsys, "table", "coeff_stats", "--nmax", "4")[1])))
    assert rows[0]["positive_excess"] == "1"


def test_table_deterministic(capsys):
    first = run(capsys, "table", "coeff_stats", "--nmax", "10", "--format", "json")[1]
    assert run(capsys, "table", "coeff_stats", "--nmax", "10", "--format", "json")[1] == first


def test_table_io_error_exit_3(tmp_path, capsys):
    code, _, err = run(capsys, "table", "alpha", "--out", str(tmp_path / "missing" / "a.csv"))
    assert code == 3 and "cannot write" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "zagier", "compute", "zagier", "1", "--at", "0"], capture_output=True, text=True)
    assert (proc.returncode, proc.stdout) == (0, "3/4\n")
