from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from mvcheb.cli import main
from mvcheb.render import parse_pi, parse_poly
from mvcheb.weight import weight_poly


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_weight_json(capsys):
    code, out = run(capsys, "weight", "--two-ell", "1", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"params", "data", "provenance"}
    assert "equation" in doc["provenance"]
    assert doc["data"]["W"] == [["2", "2x"], ["2x", "2"]]
    w = weight_poly(3)
    _, out = run(capsys, "weight", "--two-ell", "3", "--format", "json")
    parsed = json.loads(out)["data"]["W"]
    assert all(parse_poly(parsed[i][j]) == w[i, j] for i in range(4) for j in range(4))


def test_weight_csv(capsys):
    code, out = run(capsys, "weight", "--two-ell", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    w = [r for r in rows if r["table"] == "W"]
    assert len(w) == 4
    assert {(r["row"], r["col"]): r["value"] for r in w}[("0", "1")] == "2x"


def test_negative_two_ell_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["weight", "--two-ell", "-1"])
    assert exc.value.code == 2


def test_polys_domains(capsys):
    _, out = run(capsys, "polys", "--two-ell", "1", "--degree", "1", "--domain", "u", "--format", "json")
    data = json.loads(out)["data"]
    assert data["R"]["1"] == [["u - 1/2", "1/8"], ["1/8", "u - 1/2"]]
    assert data["R"]["0"] == [["1", "0"], ["0", "1"]]
    assert parse_pi(data["H"]["1"][0][0]) * 16 == 3
    _, out = run(capsys, "polys", "--two-ell", "1", "--degree", "1", "--domain", "x", "--format", "json")
    assert json.loads(out)["data"]["P"]["1"] == [["x", "-1/4"], ["-1/4", "x"]]


def test_polys_float(capsys):
    _, out = run(capsys, "polys", "--two-ell", "1", "--degree", "1", "--format", "json", "--float")
    data = json.loads(out)["data"]
    assert data["X"]["0"][0] == [0.5, -0.125]


def test_hyp(capsys):
    code, out = run(capsys, "hyp", "--two-ell", "1", "--degree", "1", "--alpha", "1/3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["params"]["alpha"] == "1/3"
    assert doc["data"]["R"][0] == ["u - 1/2", "1/8"]


def test_verify_exit_codes(capsys):
    code, out = run(capsys, "verify", "--suite", "ldu", "--two-ell-max", "4")
    assert code == 0 and out.startswith("PASS ldu")
    code, _ = run(capsys, "verify", "--suite", "all", "--two-ell-max", "2", "--degree-max", "3")
    assert code == 0
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nosuch"])
    assert exc.value.code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from mvcheb import verify

    monkeypatch.setitem(verify.SUITES, "ldu", lambda r: iter([("broken", {}, lambda: "forced mismatch")]))
    code, out = run(capsys, "verify", "--suite", "ldu")
    assert code == 1
    assert "forced mismatch" in out


def test_verify_json_is_deterministic(capsys):
    _, a = run(capsys, "verify", "--suite", "det", "--suite", "group", "--format", "json")
    _, b = run(capsys, "verify", "--suite", "det", "--suite", "group", "--format", "json")
    assert a == b
    doc = json.loads(a)
    assert [r["suite"] for r in doc["data"]] == ["det", "group"]


def test_eval_examples(capsys):
    _, out = run(capsys, "eval", "--two-ell", "0", "--degree", "2", "--x0", "1", "--format", "json")
    assert json.loads(out)["data"]["P"] == [[0.75]]
    _, out = run(capsys, "eval", "--two-ell", "1", "--degree", "1", "--x0", "0", "--format", "json")
    assert json.loads(out)["data"]["P"] == [[0.0, -0.25], [-0.25, 0.0]]
    _, out = run(capsys, "eval", "--two-ell", "1", "--degree", "0", "--x0", "0.6", "--format", "json")
    assert json.loads(out)["data"]["W"][0][1] == pytest.approx(2 * 0.6 * 0.8, rel=1e-12)


def test_eval_out_of_domain(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--two-ell", "1", "--degree", "1", "--x0", "2"])
    assert exc.value.code == 2


def test_eval_precision(capsys):
    _, out = run(capsys, "eval", "--two-ell", "2", "--degree", "3", "--x0", "0.3", "--precision", "4", "--format", "json")
    vals = [v for row in json.loads(out)["data"]["P"] for v in row]
    assert all(len(repr(abs(v)).replace(".", "").lstrip("0")) <= 5 for v in vals if v)


def test_console_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "mvcheb.cli", "polys", "--two-ell", "0", "--degree", "2"],
        capture_output=True,
        text=True,
        check=True,
    ).stdout
    assert "x^2 - 1/4" in out
