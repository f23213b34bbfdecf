import io
import json
import subprocess
import sys

import pytest

from matalg.cli import emit_summary, main, parse_job
from matalg.errors import InputError
from matalg.serialize import matrix_from_json, parse_field

E12 = [["0", "1"], ["0", "0"]]
E21 = [["0", "0"], ["1", "0"]]


def run(sub, job, *flags):
    out, err = io.StringIO(), io.StringIO()
    stdin = io.StringIO(job if isinstance(job, str) else json.dumps(job))
    old = sys.stderr
    sys.stderr = err
    try:
        code = main([sub, *flags], stdin=stdin, stdout=out)
    finally:
        sys.stderr = old
    return code, json.loads(out.getvalue()), err.getvalue()


def test_parse_minimal_job():
    job = parse_job(json.dumps({"command": "closure", "field": "GF(7)", "n": 2, "generators": [E12]}))
    assert job.seed == 0 and job.n == 2 and len(job.generators) == 1


def test_fraction_canonicalized():
    job = parse_job({"command": "closure", "field": "Q", "n": 1, "generators": [[["2/4"]]]})
    assert job.canonical()["generators"][0]["entries"] == [["1/2"]]


def test_prime_check_error():
    with pytest.raises(InputError, match="not prime"):
        parse_job({"command": "closure", "field": {"field": "GF", "p": 4}, "n": 1})


def test_diagnostics_name_the_entry():
    with pytest.raises(InputError, match=r"generators\[1\]\.entries\[0\]\[1\]"):
        parse_job({"command": "closure", "field": "Q", "n": 2, "generators": [E12, [["0", "x"], ["0", "0"]]]})
    with pytest.raises(InputError, match="line 2"):
        parse_job('{"command": "closure",\n "field": }')


def test_burnside_certified():
    code, rep, _ = run("burnside", {"field": "GF(2)", "n": 2, "generators": [E12, E21]})
    assert code == 0 and rep["status"] == "certified" and rep["dimension"] == 4


def test_triangularize_obstructed():
    code, rep, err = run("tri", {"field": "Q", "n": 2, "generators": [[["0", "-1"], ["1", "0"]]]})
    assert code == 0 and rep["status"] == "obstructed" and rep["witness"]["dim"] == 2


def test_triangularized_summary():
    upper = [["1", "1", "0"], ["0", "2", "1"], ["0", "0", "3"]]
    code, rep, err = run("tri", {"field": "Q", "n": 3, "generators": [upper]})
    assert rep["chainDims"] == [0, 1, 2, 3]
    assert "chain 0<1<2<3; inner eigenvalues per generator: gen0: 1, 2, 3" in err


def test_reducible_summary():
    code, rep, err = run("irr", {"field": "Q", "n": 2, "generators": [[["1", "1"], ["0", "2"]]]})
    assert rep["status"] == "reducible" and "invariant subspace of dim 1 found" in err


def test_audit_summary():
    code, rep, err = run("audit-field", {"field": "Q", "n": 4})
    assert code == 0 and rep["allFail"] and rep["k"] == 2
    assert "conditions (i)-(v): all fail; witness k=2" in err


def test_inconclusive_exit_code():
    # companion of x^20 - 10x^10 + 1: irreducible over Q, reducible mod every prime
    n = 20
    M = [["0"] * n for _ in range(n)]
    for i in range(1, n):
        M[i][i - 1] = "1"
    M[0][n - 1], M[10][n - 1] = "-1", "10"
    code, rep, _ = run("irr", {"field": "Q", "n": n, "generators": [M]})
    assert code == 2 and rep["status"] == "inconclusive"


def test_input_error_exit_code():
    code, rep, _ = run("close", "not json")
    assert code == 1 and rep["status"] == "error"
    code, rep, _ = run("close", {"field": "Q", "n": 2, "generators": [[["1"]]]})
    assert code == 1


def test_flags_override_job():
    code, rep, _ = run("close", {"field": "Q", "n": 2, "generators": [E12]}, "--seed", "7", "--unital")
    assert rep["seed"] == 7 and rep["dimension"] == 2


def test_report_matrices_round_trip():
    code, rep, _ = run("comm", {"field": "GF(3)", "n": 2, "generators": [[["1", "2"], ["0", "1"]]]})
    F = parse_field("GF(3)")
    for m in rep["basis"]:
        M = matrix_from_json(F, m)
        assert matrix_from_json(F, {"rows": M.rows, "cols": M.cols, "entries": m["entries"]}) == M


def test_quaternion_job():
    job = {"field": "H", "n": 2, "generators": [[[{"b": "1"}, "0"], ["0", {"c": "1"}]]]}
    code, rep, _ = run("irr", job)
    assert code == 0 and rep["status"] == "reducible"


def test_console_entry_point(tmp_path):
    path = tmp_path / "job.json"
    path.write_text(json.dumps({"field": "GF(2)", "n": 2, "generators": [E12, E21]}))
    runs = [subprocess.run([sys.executable, "-m", "matalg", "burnside", "--in", str(path)],
                           capture_output=True, text=True) for _ in range(2)]
    assert runs[0].returncode == 0 and runs[0].stdout == runs[1].stdout
    assert json.loads(runs[0].stdout)["status"] == "certified"


def test_emit_summary_is_stable():
    rep = {"command": "irreducible", "status": "reducible", "seed": 0,
           "witness": {"ambient": 2, "dim": 1, "basis": [["1", "0"]]}}
    assert emit_summary(rep, io.StringIO()) == emit_summary(rep, io.StringIO())
