import json

import pytest

from conformalk import __version__
from conformalk.cli import main, parse_grid, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(out):
    return json.loads(out[out.index("{"):])


def test_singular_family_a(capsys):
    code, out, _ = run(capsys, "singular", "--n", "4", "--mu", "-1;1,0")
    assert code == 0
    rep = report(out)
    assert rep["version"] == __version__
    assert rep["config"]["mu"] == "-1;1,0"
    assert rep["result"]["vectors"][0]["family"] == "A"
    assert all(c["passed"] and isinstance(c["claim"], str) for c in rep["checks"])


def test_singular_empty(capsys):
    code, out, _ = run(capsys, "singular", "--n", "4", "--mu", "1;1,0", "--dmax", "2")
    assert code == 0
    assert report(out)["result"]["dimension"] == 0


def test_trivial_weight_reports_mismatch(capsys):
    code, out, _ = run(capsys, "singular", "--n", "4", "--mu", "0;0,0", "--dmax", "2")
    assert code == 1
    assert report(out)["result"]["dimension"] == 1


@pytest.mark.parametrize("argv", [
    ["singular", "--n", "4", "--mu", "bad"],
    ["singular", "--n", "4", "--mu", "0;1"],
    ["singular", "--n", "4", "--mu", "0;0,1"],
    ["bogus"],
    [],
    ["axioms", "--n", "12"],
    ["axioms", "--n", "2"],
    ["action", "--n", "3", "--mu", "0;1", "--f", "x4", "--g", "1"],
    ["scan", "--n", "4", "--mu-grid", "0:1;1"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_n_guard_override(capsys):
    code, out, _ = run(capsys, "axioms", "--n", "2", "--allow-any-n")
    assert code == 0
    assert report(out)["passed"]


def test_deterministic_json(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "singular", "--n", "3", "--mu", "2;1", "--json", str(p1))
    run(capsys, "singular", "--n", "3", "--mu", "2;1", "--json", str(p2))
    assert p1.read_bytes() == p2.read_bytes()
    assert json.loads(p1.read_text())["result"]["vectors"][0]["family"] == "B"


def test_action_text_and_alpha(capsys):
    code, out, _ = run(capsys, "action", "--n", "3", "--mu", "5;1", "--f", "1", "--g", "1")
    assert code == 0
    assert out.splitlines()[0] == "[(-2) d [1](x)v0]"
    code, out, _ = run(capsys, "action", "--n", "3", "--mu", "5;1", "--f", "1", "--g", "1",
                       "--alpha", "1")
    assert report(out)["action"]["0"][0]["dpow"] == 0


def test_rep(capsys):
    code, out, _ = run(capsys, "rep", "--n", "5", "--mu", "0;1/2,1/2")
    assert code == 0
    assert report(out)["rep"]["dim"] == 4


def test_axioms(capsys):
    code, out, _ = run(capsys, "axioms", "--n", "3")
    assert code == 0 and report(out)["passed"]


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--n", "3", "--mu-grid", "-1:2:1/2;1/2")
    assert code == 0
    table = report(out)["table"]
    assert [r["mu"][0] for r in table if r["reducible"]] == ["-1/2", "3/2"]


def test_parse_grid():
    ws = parse_grid("0:1;0:1,0", 4)
    assert [str(w) for w in ws] == ["(0;0,0)", "(0;1,0)", "(1;0,0)", "(1;1,0)"]
    with pytest.raises(UsageError):
        parse_grid("0:1:0;0,0", 4)


def test_contact_minus(capsys):
    code, out, _ = run(capsys, "contact", "--n", "3", "--side", "minus", "--tmax", "3")
    assert code == 0
    assert report(out)["defects"] == {"0": 0, "1": 1, "2": 0, "3": 0}


def test_contact_plus_reports_level_one(capsys):
    code, out, _ = run(capsys, "contact", "--n", "3", "--side", "plus", "--tmax", "3")
    rep = report(out)
    assert rep["defects"] == {"0": 1, "1": 0, "2": 0, "3": 0}
    failed = [c for c in rep["checks"] if not c["passed"]]
    assert code == 1 and [c["level"] for c in failed] == [1]


def test_catalog(capsys):
    code, out, err = run(capsys, "catalog", "--n", "3")
    assert code == 2 and "n >= 4" in err
    code, out, _ = run(capsys, "catalog", "--n", "4", "--kmax", "1")
    assert code == 0
    rep = report(out)
    assert [f["family"] for f in rep["families"]] == [1, 2, 3]
    assert rep["families"][0]["excluded"][0]["weights"] == [["-1", "1", "0"], ["3", "1", "0"]]


def test_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("CONFORMALK_THREADS", "2")
    code, out, _ = run(capsys, "scan", "--n", "3", "--mu-grid", "-1:0:1/2;1/2")
    assert code == 0
    assert [r["mu"][0] for r in report(out)["table"]] == ["-1", "-1/2", "0"]
