from __future__ import annotations

import json

import pytest

from relcat import cli
from relcat import modelio as mio


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def examples(tmp_path, capsys):
    cli.main(["init-examples", str(tmp_path)])
    capsys.readouterr()
    return tmp_path


def test_init_examples(tmp_path, capsys):
    code, out, _ = run(capsys, "init-examples", str(tmp_path))
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["bool2.json", "paper3chain.json", "rno1.json", "rno2chain.json", "z3group.json"]
    d = json.loads((tmp_path / "paper3chain.json").read_text())
    assert d["relations"]["X"]["matrix"] == [["0", "u"]]


def test_paper_example(capsys):
    code, out, _ = run(capsys, "paper-example")
    assert code == 0
    assert out.count(" ok") == 6
    assert "star(star(X;conv(C)))" in out


def test_paper_example_json(capsys):
    code, out, _ = run(capsys, "paper-example", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["match"]
    assert [r["value"] for r in d["rows"]] == [
        [["0", "1"]], [["1", "1"]], [["0", "1"]], [["1", "0"]], [["u", "0"]], [["1", "0"]]]


def test_paper_example_detects_regression(capsys, monkeypatch):
    tampered = json.loads(json.dumps(mio.PAPER_MODEL))
    tampered["relations"]["X"]["matrix"] = [["0", "1"]]
    monkeypatch.setattr(mio, "PAPER_MODEL", tampered)
    code, out, _ = run(capsys, "paper-example")
    assert code == 1
    assert "MISMATCH" in out and "REGRESSION" in out


def test_check_examples(capsys, examples):
    code, out, _ = run(capsys, "check", "--model", str(examples / "paper3chain.json"),
                       "--laws", "downClosed,downClosedNoStar")
    assert code == 0
    assert "PASS" in out and "EXPECTED-FAIL-CONFIRMED" in out
    assert "X = (0 u)" in out


def test_check_group_model(capsys, examples):
    code, out, _ = run(capsys, "check", "--model", str(examples / "z3group.json"), "--laws", "groupProps*")
    assert code == 0
    assert out.count("PASS") == 4


def test_check_json_worker_independent(capsys, examples):
    args = ["check", "--model", str(examples / "bool2.json"), "--laws", "schroeder,maps*",
            "--format", "json"]
    _, one, _ = run(capsys, *args, "--workers", "1")
    _, two, _ = run(capsys, *args, "--workers", "2")
    a, b = json.loads(one), json.loads(two)
    assert "timing" in a
    a.pop("timing"), b.pop("timing")
    assert a == b
    assert a["exit_code"] == 0 and a["cap"] > 0


def test_check_random_needs_seed(capsys):
    code, _, err = run(capsys, "check", "--strategy", "random")
    assert code == 2 and "--seed" in err


def test_check_random(capsys):
    args = ["check", "--laws", "maps1", "--strategy", "random", "--samples", "50", "--seed", "3",
            "--format", "json"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    da, db = json.loads(a), json.loads(b)
    da.pop("timing"), db.pop("timing")
    assert da == db and da["strategy"] == "random(50, 3)"


def test_cap_error(capsys, monkeypatch):
    monkeypatch.setenv("RELCAT_CAP", "10")
    code, out, _ = run(capsys, "check", "--laws", "downClosed")
    assert code == 2 and "ERROR" in out


def test_input_errors(capsys, tmp_path):
    assert run(capsys, "check", "--laws", "nosuch")[0] == 2
    assert run(capsys, "check", "--model", str(tmp_path / "missing.json"))[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(capsys, "check", "--model", str(bad))
    assert code == 2 and "invalid JSON" in err
    bad.write_text(json.dumps({"lattice": "pentagon"}))
    assert run(capsys, "check", "--model", str(bad))[0] == 2
    assert run(capsys, "check", "--samples", "0")[0] == 2


def test_eval(capsys):
    code, out, _ = run(capsys, "eval", "ubd(E, X)")
    assert code == 0 and out.strip() == "(0 1)"
    code, _, err = run(capsys, "eval", "Q ; X")
    assert code == 2 and "unknown identifier" in err
    code, _, err = run(capsys, "eval", "X ; X")
    assert code == 2


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--laws", "downClosedNoStar")
    assert code == 0
    assert "violation in chain:3[" in out
    code, out, _ = run(capsys, "search", "--laws", "boundLemma", "--lattices", "bool")
    assert code == 0 and "no violation in 4 model(s)" in out


def test_search_reports_broken_theorem(capsys, monkeypatch):
    from relcat.lawlang import parse_law
    wrong = parse_law("law wrong ; anchor \"w\" ; var Q : A -> A ; conclude Q ; Q <= Q")
    monkeypatch.setattr(cli, "select_laws", lambda spec: [wrong])
    code, out, _ = run(capsys, "search", "--lattices", "bool")
    assert code == 1 and "wrong: violation" in out


def test_search_json_worker_independent(capsys):
    args = ["search", "--laws", "downClosedNoStar,boundLemma", "--format", "json", "--all"]
    _, one, _ = run(capsys, *args)
    _, two, _ = run(capsys, *args, "--workers", "2")
    a, b = json.loads(one), json.loads(two)
    a.pop("timing"), b.pop("timing")
    assert a == b
    assert a["results"][0]["violations"]


def test_laws(capsys):
    code, out, _ = run(capsys, "laws")
    assert code == 0 and "downClosedNoStar" in out and "expect fail on paper3chain" in out
    code, out, _ = run(capsys, "laws", "--format", "json")
    d = json.loads(out)
    assert len(d["laws"]) >= 45
