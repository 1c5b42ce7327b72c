import json
import random

import pytest

from insdel_rs.artifacts import load_spec
from insdel_rs.cli import main
from insdel_rs.criterion import verify_code
from insdel_rs.rs_code import encode, random_message

from oracles import consecutive_code


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def test_construct_and_verify_sidon(tmp_path, capsys):
    out = tmp_path / "code.json"
    rc, _ = run(capsys, "construct", "sidon-k2", "--m", 2, "--seed", 0, "--out", out)
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["n"] == 5 and doc["provenance"] == {
        "construction": "sidon-k2", "params": {"m": 2, "modulus_seed": 0}, "seed": 0}
    rc, io = run(capsys, "verify", out)
    report = json.loads(io.out)
    assert rc == 0 and report["verdict"] == "pass" and report["pairs_checked"] == 30
    kind, code = load_spec(out)
    assert kind == "field" and verify_code(code).verdict == report["verdict"]


def test_artifacts_are_byte_identical(tmp_path, capsys, monkeypatch):
    paths = []
    for jobs in ("1", "2"):
        monkeypatch.setenv("INSDEL_RS_JOBS", jobs)
        p = tmp_path / f"r{jobs}.json"
        assert run(capsys, "construct", "random", "--n", 6, "--k", 2, "--q", 101, "--seed", 1, "--out", p)[0] == 0
        paths.append(p)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "construct", "sidon-k2", "--m", 2, "--out", a)
    run(capsys, "construct", "sidon-k2", "--m", 2, "--out", b)
    assert a.read_bytes() == b.read_bytes()


def test_verify_failing_spec(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(consecutive_code().to_json()))
    rc, io = run(capsys, "verify", p, "--deterministic")
    report = json.loads(io.out)
    assert rc == 1 and report["first_failure"] == {"I": [1, 2, 3], "J": [2, 3, 4]}
    rc, io = run(capsys, "verify", p, "--full")
    assert rc == 1 and len(json.loads(io.out)["failures"]) > 1


@pytest.mark.parametrize("content", ["{not json", "[1, 2]", '{"field": {"p": 7}, "n": 5}',
                                     '{"field": {"p": 8, "d": 1}, "n": 1, "k": 1, "alphas": [1]}'])
def test_malformed_spec(tmp_path, capsys, content):
    p = tmp_path / "m.json"
    p.write_text(content)
    assert run(capsys, "verify", p)[0] == 2


def test_missing_file_and_usage(tmp_path, capsys):
    assert run(capsys, "verify", tmp_path / "nope.json")[0] == 2
    assert run(capsys, "construct", "sidon-k2")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_exhausted_search_exit_code(capsys):
    assert run(capsys, "construct", "random", "--n", 6, "--k", 2, "--q", 7, "--max-attempts", 5)[0] == 3


def test_abc_ring_artifact(tmp_path, capsys):
    p = tmp_path / "abc.json"
    assert run(capsys, "construct", "abc", "--k", 2, "--n", 6, "--out", p)[0] == 0
    doc = json.loads(p.read_text())
    assert doc["form"] == "ring" and doc["p"] == 2309 and len(doc["alphas"]) == 6
    kind, (params, alphas) = load_spec(p)
    assert kind == "ring" and alphas[0].degree == 576
    rc, io = run(capsys, "verify", p)
    assert rc == 0 and json.loads(io.out)["verdict"] == "pass"
    assert run(capsys, "construct", "abc", "--k", 3, "--n", 8)[0] == 2
    assert run(capsys, "simulate", p, "--budget", 1)[0] == 2


def test_simulate_and_decode(tmp_path, capsys):
    spec = tmp_path / "c.json"
    run(capsys, "construct", "sidon-k2", "--m", 2, "--out", spec)
    log = tmp_path / "t.jsonl"
    rc, io = run(capsys, "simulate", spec, "--trials", 40, "--budget", 2, "--seed", 5, "--out", log)
    assert rc == 0 and json.loads(io.out)["outcomes"] == {"ok": 40}
    lines = [json.loads(x) for x in log.read_text().splitlines()]
    assert len(lines) == 40 and set(lines[0]) == {"message", "script", "received", "outcome", "ed"}
    assert run(capsys, "simulate", spec, "--budget", 3)[0] == 2

    _, code = load_spec(spec)
    f = random_message(code, random.Random(0))
    word = tmp_path / "w.json"
    word.write_text(json.dumps([e.to_json() for e in encode(code, f)]))
    rc, io = run(capsys, "decode", spec, word)
    out = json.loads(io.out)
    assert rc == 0 and out["outcome"] == "decoded" and out["ed"] == 0 and out["message"] == f.to_json()
    word.write_text(json.dumps([e.to_json() for e in encode(code, f)][:1]))
    assert run(capsys, "decode", spec, word)[0] == 1


def test_bounds(capsys):
    rc, io = run(capsys, "bounds", "--n", 14, "--k", 2)
    out = json.loads(io.out)
    assert rc == 0
    assert out["field_size_lower_bound_exact"] == "1372/27"
    assert abs(out["field_size_lower_bound"] - 50.81) < 0.01
    assert out["trivial_lower_bound"] == 14 and "531441" in out["note"]
    assert run(capsys, "bounds", "--n", 2, "--k", 2)[0] == 2
