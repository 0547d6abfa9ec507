import json
import os
import subprocess

import pytest

CLI = os.environ.get("LOOPVERTEX_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="LOOPVERTEX_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_chartable_json():
    p = run("chartable", "--n", "2", "--d", "2", "--format", "json")
    assert p.returncode == 0
    t = json.loads(p.stdout)
    assert len(t["irreps"]) == len(t["classes"]) == 5


def test_loopschur_methods():
    outs = [json.loads(run("loopschur", "--n", "2", "--lambda", "[2,2]", "--method", m, "--degree", "4").stdout)
            for m in ("ssyt", "hook", "jt")]
    assert outs[0]["series"] == outs[1]["series"] == outs[2]["series"]


def test_vertex_commands():
    p = run("dt-vertex", "--n", "2", "--rho-plus", "[1]", "--rho-minus", "[]", "--lambda", "[[1],[]]",
            "--alpha", "1,-1", "--w", "1,-3,2", "--degree", "3", "--json")
    assert p.returncode == 0 and json.loads(p.stdout)["kind"] == "dt-vertex"
    p = run("gw-vertex-ws", "--n", "3", "--tau-plus", "[1]", "--tau-minus", "[1,1]", "--alpha", "1,1", "--degree", "3")
    assert p.returncode == 0 and "x1" in p.stdout


def test_verify_exit_codes(tmp_path):
    ok = tmp_path / "ok.json"
    ok.write_text(json.dumps({"fp": {"terms": 4}}))
    out = tmp_path / "report.json"
    p = run("verify", "fp", "--config", str(ok), "--json", str(out))
    assert p.returncode == 0
    assert json.loads(out.read_text())["summary"]["pass"] is True

    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"fp": {"terms": "x"}}))
    assert run("verify", "fp", "--config", str(bad)).returncode == 2
    bad.write_text("{not json")
    assert run("verify", "all", "--config", str(bad)).returncode == 2
    assert run("verify", "nonsense").returncode == 2

    # q negated: the correspondence fails, and the report says where
    failing = tmp_path / "fail.json"
    failing.write_text(json.dumps({"sym-corr": {"n": [1], "max_tau": 1, "degree": 3, "negate_q": [True]}}))
    p = run("verify", "sym-corr", "--config", str(failing), "--json", str(out))
    assert p.returncode == 1
    r = json.loads(out.read_text())
    bad_cases = [c for c in r["cases"] if not c["pass"]]
    assert bad_cases and bad_cases[0]["witness"]["monomial"]


def test_bad_input_exit_code():
    assert run("dt-vertex", "--n", "2", "--rho-plus", "[1,2]").returncode == 2
    assert run("loopschur", "--n", "2", "--lambda", "[1]").returncode == 2
