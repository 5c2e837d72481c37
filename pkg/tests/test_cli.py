from __future__ import annotations

import json
import subprocess
import sys

import pytest

from rotabaxter.cli import main

FIB = '{"family":"Fibonacci","a":"0","b":"1"}'
PERTURBED = json.dumps({
    "family": "Custom", "weight": "1",
    "base": {"family": "Fibonacci", "a": "0", "b": "1", "theta": "0"},
    "table": [{"n": 1, "m": 1, "coeff": "3/2", "image": {"n": 0, "m": 2}}],
})


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def test_verify_rb_pass(capsys):
    code, data, err = run(capsys, "verify-rb", "--family", FIB, "--weight", "1", "-N", "12")
    assert code == 0 and data["report"]["passed"] and not err
    assert data["N"] == 12 and data["weight"] == "1"


def test_verify_rb_perturbed_table(capsys):
    code, data, _ = run(capsys, "verify-rb", "--family", PERTURBED, "-N", "6")
    assert code == 1
    assert data["report"]["first_violation"]["inputs"] == ["x", "x*y"]


def test_verify_rb_excluded_first_row(capsys):
    fam = '{"family":"R1General","q0":"1","q1":"2","q2":"3","theta":"0"}'
    code, data, err = run(capsys, "verify-rb", "--family", fam)
    assert code == 2 and data is None
    assert "2q1 = q0+q2" in err


@pytest.mark.parametrize("argv", [
    ["verify-rb", "--family", "{not json"],
    ["verify-rb"],
    ["verify-rb", "--family", '{"family":"R1General","q0":"1","q1":"2","q2":"4"}'],
    ["verify-rb", "--family", '{"family":"Case1","r":1,"rho":"2","theta":"0"}'],
    ["decomp", "--spec", '{"case":"IV"}'],
    ["table", "--family", '{"family":"VieillardBaron"}'],
    ["verify-averaging", "--spec", '{"case":"Case2","r":1,"alpha":"0"}'],
])
def test_construction_errors_exit_2(capsys, argv):
    code, data, err = run(capsys, *argv)
    assert code == 2 and data is None and err.startswith("rotabaxter ")


def test_theta_flag(capsys):
    fam = '{"family":"R1General","q0":"1","q1":"2","q2":"4"}'
    code, data, _ = run(capsys, "verify-rb", "--family", fam, "--theta", "0", "-N", "6")
    assert code == 0 and data["family"]["theta"] == "0"


def test_classify_counts(capsys):
    assert run(capsys, "classify", "--bound", "1")[1]["count"] == 8
    code, data, _ = run(capsys, "classify", "--bound", "0")
    assert data["count"] == 1 and data["entries"][0]["spec"]["case"] == "Case5"


def test_classify_round_trip(capsys):
    code, data, _ = run(capsys, "classify", "--bound", "2", "--verify", "-N", "8", "--scalars", "3,2")
    assert code == 0
    assert all(e["check_averaging"]["passed"] for e in data["entries"])


def test_verify_averaging(capsys):
    code, data, _ = run(capsys, "verify-averaging", "--spec", '{"case":"Case2","r":1,"alpha":"3"}', "-N", "8")
    assert code == 0 and set(data["reports"]) == {"averaging", "idempotent", "negation_rb", "negation_splitting"}


def test_table_cross_checks(capsys):
    code, data, _ = run(capsys, "table", "--family", FIB, "-K", "3", "-M", "6", "--cross-check")
    assert code == 0 and data["cross_check"]["passed"]
    assert "fibonacci_row" in data["cross_check"]["routes"]
    aba = '{"family":"R1Q0EqQ2","q0":"1","q1":"2"}'
    assert run(capsys, "table", "--family", aba, "-K", "4", "-M", "8", "--cross-check")[0] == 0


def test_table_k_zero(capsys):
    code, data, _ = run(capsys, "table", "--family", FIB, "-K", "0", "-M", "4")
    coeffs = [(r["n"], r["m"], r["coeff"]) for r in data["table"]]
    assert coeffs == [(0, 0, "-1")] + [(0, m, "-1") for m in range(1, 5)]
    assert data["theta"] == "-1"


def test_decomp(capsys):
    code, data, _ = run(capsys, "decomp", "--spec", '{"case":"IV","slope":"1"}', "-N", "15")
    assert code == 0 and data["witnesses"] == []
    assert data["slopes"]["beta_hat"] == "1"
    code, data, _ = run(capsys, "decomp", "--spec", '{"case":"HalfPlane","k":1,"l":-1,"c":2}', "-N", "6")
    assert code == 1 and ["x*y^2", "x*y^2"] in data["witnesses"]
    code, data, _ = run(capsys, "decomp", "--spec", '{"case":"VI","slope":{"a":"0","b":"1","D":"2"}}',
                        "-N", "20", "--weight", "2")
    assert code == 0


def test_s_seq(capsys):
    code, data, _ = run(capsys, "s-seq", "--s2=-1/2", "-M", "30", "--identities")
    assert code == 0 and data["match"] and data["recurrence"][4] == "-2/5"
    for bad in ("0", "-1", "1", "-1/3"):
        assert run(capsys, "s-seq", f"--s2={bad}", "-M", "5")[0] == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code = main(["decomp", "--spec", '{"case":"II"}', "-N", "6", "--out", str(target)])
    assert code == 0 and capsys.readouterr().out == ""
    assert json.loads(target.read_text())["spec"]["case"] == "II"


def test_family_from_file(tmp_path, capsys):
    path = tmp_path / "fam.json"
    path.write_text(PERTURBED)
    assert run(capsys, "verify-rb", "--family", f"@{path}", "-N", "6")[0] == 1


def test_bad_workers():
    with pytest.raises(SystemExit):
        main(["verify-rb", "--family", FIB, "--workers", "0"])


@pytest.mark.parametrize("argv", [
    ["verify-rb", "--family", PERTURBED, "-N", "7"],
    ["decomp", "--spec", '{"case":"HalfPlane","k":1,"l":-1,"c":2}', "-N", "8"],
])
def test_output_is_identical_across_worker_counts(argv):
    outs = {subprocess.run([sys.executable, "-m", "rotabaxter.cli", *argv, "--workers", str(w)],
                           capture_output=True, check=False).stdout for w in (1, 2, 5)}
    assert len(outs) == 1 and outs.pop()
