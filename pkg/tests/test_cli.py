import csv
import io
import json
import math
import subprocess
import sys

import numpy as np
import pytest

from inflbeta.cli import main, read_csv
from inflbeta.errors import DataError


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# ------------------------------------------------------------------ read_csv

def test_read_csv_basic(tmp_path):
    d = read_csv(write(tmp_path, "a.csv", "0\n0.5\n1\n"))
    assert list(d.values) == [0.0, 0.5, 1.0]
    assert d.values[0] == 0.0 and d.values[2] == 1.0


def test_read_csv_header_and_columns(tmp_path):
    path = write(tmp_path, "b.csv", "id,share\n1, 0.25 \n2,0\n\n3,1.0\n")
    assert list(read_csv(path, "share", header=True).values) == [0.25, 0.0, 1.0]
    assert list(read_csv(path, 1, header=True).values) == [0.25, 0.0, 1.0]
    assert list(read_csv(path, "1", header=True).values) == [0.25, 0.0, 1.0]
    with pytest.raises(DataError, match="not found"):
        read_csv(path, "ratio", header=True)


def test_read_csv_errors_name_row(tmp_path):
    with pytest.raises(DataError, match=r"row 2.*1\.2"):
        read_csv(write(tmp_path, "c.csv", "0.5\n1.2\n"))
    with pytest.raises(DataError, match="row 3.*abc"):
        read_csv(write(tmp_path, "d.csv", "0.5\n0.1\nabc\n"))
    with pytest.raises(DataError, match="no data"):
        read_csv(write(tmp_path, "e.csv", "x\n"), header=True)


# ------------------------------------------------------------------- sample

def test_sample_zero_draws():
    code, out, _ = run(["sample", "--family", "bezi", "--alpha", "0.2", "--mu", "0.1", "--phi", "2",
                        "-n", "0", "--seed", "1"])
    assert code == 0 and out == ""


def test_sample_reproducible_and_round_trippable():
    args = ["sample", "--family", "beinf", "--alpha", "0.2", "--gamma", "0.3", "--mu", "0.1",
            "--phi", "2", "-n", "50", "--seed", "9"]
    a, b = run(args)[1], run(args)[1]
    assert a == b
    vals = [float(v) for v in a.split()]
    assert len(vals) == 50 and all(0 <= v <= 1 for v in vals)
    assert run(args[:-1] + ["10"])[1] != a


def test_sample_boundary_frequency():
    n = 10 ** 5
    code, out, _ = run(["sample", "--family", "bezi", "--alpha", "0.2", "--mu", "0.1", "--phi", "2",
                        "-n", str(n), "--seed", "3"])
    y = np.array(out.split(), dtype=float)
    assert abs(np.mean(y == 0.0) - 0.2) < 4 * math.sqrt(0.16 / n)


def test_sample_validation_errors():
    code, _, err = run(["sample", "--family", "bezi", "--alpha", "1.5", "--mu", "0.1", "--phi", "2",
                        "-n", "5", "--seed", "1"])
    assert code == 2 and "alpha" in err
    code, _, err = run(["sample", "--family", "beinf", "--alpha", "0.2", "--mu", "0.1", "--phi", "2",
                        "-n", "5", "--seed", "1"])
    assert code == 2 and "--gamma" in err


# ---------------------------------------------------------------------- fit

def sample_file(tmp_path, n, seed, family="beinf", extra=()):
    args = ["sample", "--family", family, "--alpha", "0.2", "--mu", "0.1", "--phi", "2",
            "-n", str(n), "--seed", str(seed)] + list(extra)
    if family == "beinf":
        args += ["--gamma", "0.3"]
    return write(tmp_path, "s.csv", run(args)[1])


def test_fit_round_trip_large_sample(tmp_path):
    path = sample_file(tmp_path, 10 ** 5, 2024)
    code, out, _ = run(["fit", path, "--family", "beinf"])
    assert code == 0
    doc = json.loads(out)
    for key in ("family", "n", "n_zero", "n_one", "n_interior", "loglik", "method", "iterations",
                "grad_norm", "status"):
        assert key in doc
    for k, v in {"alpha": 0.2, "gamma": 0.3, "mu": 0.1, "phi": 2.0}.items():
        assert abs(doc[k] - v) < 4 * doc["se_" + k]
    # re-feed the printed estimates to the sampler and fit again
    args = ["sample", "--family", "beinf", "--alpha", repr(doc["alpha"]), "--gamma", repr(doc["gamma"]),
            "--mu", repr(doc["mu"]), "--phi", repr(doc["phi"]), "-n", str(10 ** 5), "--seed", "77"]
    again = json.loads(run(["fit", write(tmp_path, "t.csv", run(args)[1]), "--family", "beinf"])[1])
    for k in ("alpha", "gamma", "mu", "phi"):
        assert abs(again[k] - doc[k]) < 4 * math.hypot(doc["se_" + k], again["se_" + k])


def test_fit_delta_counts(tmp_path):
    path = sample_file(tmp_path, 2000, 5)
    doc = json.loads(run(["fit", path, "--family", "beinf", "--delta"])[1])
    assert doc["delta0"] == doc["n_zero"] / doc["n"]
    assert doc["delta1"] == doc["n_one"] / doc["n"]


def test_fit_cm(tmp_path):
    path = sample_file(tmp_path, 500, 6, family="bezi")
    doc = json.loads(run(["fit", path, "--family", "bezi", "--method", "cm"])[1])
    assert doc["method"] == "cm" and "se_mu" not in doc and doc["status"] == "closed-form"


def test_fit_exit_codes(tmp_path):
    code, out, err = run(["fit", write(tmp_path, "a.csv", "0\n0.3\n1\n0.5\n"), "--family", "bezi"])
    assert code == 2 and out == "" and "BEZI" in err
    code, _, err = run(["fit", write(tmp_path, "b.csv", "0.2\n0.3\n0.5\n"), "--family", "bezi"])
    assert code == 3 and "beta" in err
    code, _, _ = run(["fit", str(tmp_path / "missing.csv"), "--family", "bezi"])
    assert code == 2


# -------------------------------------------------------------------- study

def test_study_csv_byte_identical(tmp_path):
    args = ["study", "--preset", "table1", "--sizes", "20", "50", "--reps", "40", "--seed", "7",
            "--format", "csv"]
    a, b = run(args)[1], run(args)[1]
    assert a == b
    rows = list(csv.DictReader(io.StringIO(a)))
    assert list(rows[0]) == ["target", "n", "estimator", "mean", "bias", "rmse", "skipped"]
    mu = [r for r in rows if r["target"] == "mu" and r["estimator"] == "ml"]
    assert [r["n"] for r in mu] == ["20", "50"]
    # 17 significant digits round-trip exactly
    assert all(float(r["mean"]).hex() == float(repr(float(r["mean"]))).hex() for r in rows)


def test_study_csv_file_and_table(tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run(["study", "--preset", "table2", "--sizes", "30", "--reps", "20",
                        "--seed", "1", "--csv", str(path)])
    assert code == 0
    head = out.splitlines()[0].split()
    assert head[:3] == ["Par", "n", "CM"] and "sqrtMSE" in head
    assert path.read_text().startswith("target,n,estimator")
    line = next(l for l in out.splitlines() if l.split()[0] == "phi")
    assert all(len(c.split(".")[1]) == 4 for c in line.split()[2:8])


def test_study_single_replication():
    code, out, _ = run(["study", "--preset", "table1", "--sizes", "100", "--reps", "1",
                        "--format", "csv"])
    assert code == 0
    for r in csv.DictReader(io.StringIO(out)):
        if r["skipped"] == "0":
            assert float(r["rmse"]) == pytest.approx(abs(float(r["bias"])), rel=1e-12)


def test_study_user_params_and_validation():
    code, out, _ = run(["study", "--family", "beoi", "--alpha", "0.3", "--mu", "0.5", "--phi", "4",
                        "--sizes", "30", "--reps", "10", "--format", "csv"])
    assert code == 0 and "alpha,30,ml" in out
    assert run(["study", "--reps", "5"])[0] == 2
    assert run(["study", "--preset", "table1", "--reps", "0"])[0] == 2


# ---------------------------------------------------------------------- gof

def test_gof_columns_and_tobit_flag(tmp_path):
    path = sample_file(tmp_path, 300, 8, family="bezi")
    code, out, err = run(["gof", path, "--family", "bezi", "--grid", "9"])
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0] == ["y", "ecdf", "model_cdf"] and len(rows) == 10
    assert float(rows[1][0]) == 0.0 and float(rows[-1][0]) == 1.0 and float(rows[-1][1]) == 1.0
    assert "KS bezi" in err
    code, out, err = run(["gof", path, "--family", "bezi", "--grid", "9", "--tobit"])
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["y", "ecdf", "model_cdf", "tobit_cdf"] and "tobit-left" in err


def test_gof_default_grid(tmp_path):
    path = sample_file(tmp_path, 200, 9)
    code, out, _ = run(["gof", path, "--family", "beinf"])
    assert code == 0 and len(out.splitlines()) == 513


def test_gof_fit_failure_exit_code(tmp_path):
    code, out, err = run(["gof", write(tmp_path, "one.csv", "0.5\n"), "--family", "bezi"])
    assert code == 3 and out == ""


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "inflbeta", "sample", "--family", "beoi", "--alpha", "0.5",
                          "--mu", "0.5", "--phi", "2", "-n", "3", "--seed", "4"],
                         capture_output=True, text=True, check=True)
    assert len(res.stdout.split()) == 3
    bad = subprocess.run([sys.executable, "-m", "inflbeta", "fit"], capture_output=True, text=True)
    assert bad.returncode == 2
