import json
import shutil
import subprocess
import sys

import pytest

from famspecies import sweeps
from famspecies.cli import main

MAJ3 = {"universe": ["a", "b", "c"], "members": [["a", "b"], ["a", "c"], ["b", "c"], ["a", "b", "c"]]}
MF = {"universe": ["a", "b"], "values": [{"set": ["a"], "value": 1}, {"set": ["b"], "value": 1},
                                         {"set": ["a", "b"], "value": "inf"}]}
DISCRETE2 = {"universe": ["a", "b"], "opens": [[], ["a"], ["b"], ["a", "b"]]}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def as_json(out):
    return json.loads(out)


def test_classify_inline_and_file(capsys, tmp_path):
    path = tmp_path / "maj3.json"
    path.write_text(json.dumps(MAJ3))
    for src in (json.dumps(MAJ3), path):
        code, out, _ = run(capsys, "classify", src)
        assert code == 0
        sp = as_json(out)["species"]
        assert sp["self_aso"] and sp["condition_I"] and not sp["condition_O"] and not sp["filter"]


def test_aso(capsys):
    code, out, _ = run(capsys, "aso", json.dumps(MAJ3))
    assert code == 0 and sorted(map(tuple, as_json(out)["members"])) == sorted(map(tuple, MAJ3["members"]))


def test_out_core_and_inn_hull(capsys):
    code, out, _ = run(capsys, "out-core", json.dumps(MF))
    vals = {tuple(v["set"]): v["value"] for v in as_json(out)["values"]}
    assert code == 0 and vals[("a", "b")] == 2
    code, out, _ = run(capsys, "inn-hull", json.dumps(MF), "--all-values")
    vals = {tuple(v["set"]): v["value"] for v in as_json(out)["values"]}
    assert vals == {(): 0, ("a",): 1, ("b",): 1, ("a", "b"): "inf"}


def test_limit(capsys):
    code, out, _ = run(capsys, "limit", json.dumps(MF), json.dumps(DISCRETE2))
    lim = {v["element"]: v["value"] for v in as_json(out)["limit"]["values"]}
    assert code == 0 and lim == {"a": 1, "b": 1}


def test_seq_limit(capsys):
    seq = {"universe": ["a", "b"], "prefix": [], "pattern": ["a"]}
    code, out, _ = run(capsys, "seq-limit", json.dumps(seq), "--family", "cogap")
    lim = {v["element"]: v["value"] for v in as_json(out)["limit"]["values"]}
    assert code == 0 and lim == {"a": "inf", "b": 0}
    alt = {"universe": ["a", "b"], "pattern": ["a", "b"]}
    code, out, _ = run(capsys, "seq-limit", json.dumps(alt), "--family", "H")
    assert {v["value"] for v in as_json(out)["limit"]["values"]} == {0}


def test_cogap(capsys):
    code, out, _ = run(capsys, "cogap", "0:110")
    r = as_json(out)
    assert code == 0 and r["cogap"] == 2 and r["out_cogap"] == 2
    code, out, _ = run(capsys, "cogap", '{"prefix": "", "pattern": "10"}', "--witness", "3")
    assert len(as_json(out)["inn_witness"]) == 3
    code, _, err = run(capsys, "cogap", "1:0", "--witness", "2")
    assert code == 2 and "error" in json.loads(err)


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--n", "2")
    r = as_json(out)
    assert code == 0 and r["counts"]["ultrafilter"] == 2 and all(r["assertions"].values())
    code, out, _ = run(capsys, "census", "--n", "3", "--pretty")
    assert code == 0 and "self_aso_eventual & not filter" in out


def test_verify_pass_and_pretty(capsys):
    code, out, _ = run(capsys, "verify", "--sweep", "prop-flt", "--sweep", "rerere-analog")
    r = as_json(out)
    assert code == 0 and r["ok"] and [x["proposition"] for x in r["reports"]] == ["prop-flt", "rerere-analog"]
    code, out, _ = run(capsys, "--pretty", "verify", "--sweep", "aso-involution", "--n", "3")
    assert code == 0 and "PASS" in out and "256/256" in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    def failing(rep, **_):
        sweeps._Tally(rep).check(False, lambda: {"witness": 42})

    monkeypatch.setitem(sweeps.SWEEPS, "prop-flt", failing)
    code, out, _ = run(capsys, "verify", "--sweep", "prop-flt")
    r = as_json(out)
    assert code == 1 and not r["ok"] and r["reports"][0]["counterexample"] == {"witness": 42}


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["nope"],
        ["verify"],
        ["verify", "--sweep", "prop-flt", "--all"],
        ["verify", "--sweep", "unknown-id"],
        ["census", "--n", "5"],
        ["classify", '{"members": []}'],
        ["classify", "/no/such/file.json"],
        ["out-core", json.dumps({"universe": ["a", "b"], "values": [{"set": ["a"], "value": 1}]})],
        ["limit", json.dumps(MF), json.dumps({"universe": ["a", "b", "c"], "opens": [[], ["a", "b", "c"]]})],
        ["cogap", "12:3"],
    ],
)
def test_usage_and_format_errors(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_console_script_entry_point():
    exe = shutil.which("famspecies")
    cmd = [exe] if exe else [sys.executable, "-m", "famspecies.cli"]
    res = subprocess.run(cmd + ["verify", "--sweep", "rerere-analog"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["ok"]
