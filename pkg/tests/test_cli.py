import json

import pytest

from dp1 import search as S
from dp1.cli import main
from dp1.fixtures import EX_5_4, FIXTURES


def run(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_classes_json(capsys):
    rc, out = run(capsys, "classes", "--format", "json")
    data = json.loads(out)
    assert rc == 0 and data["count"] == 240
    assert [r["count"] for r in data["rows"]] == [8, 28, 56, 56, 56, 28, 8]


def test_graph_stats(capsys):
    rc, out = run(capsys, "graph-stats", "--format", "json")
    assert rc == 0 and json.loads(out)["ok"]


def test_clique_expect(capsys):
    rc, out = run(capsys, "clique", "--weights", "1,2", "--expect", "12", "--format", "json")
    assert rc == 0 and json.loads(out)["witness_verified"]
    rc, _ = run(capsys, "clique", "--weights", "1,2", "--expect", "13")
    assert rc == 1


def test_weyl(capsys):
    rc, out = run(capsys, "weyl", "orbit", "--start", "1;1,1", "--format", "json")
    assert rc == 0 and json.loads(out)["orbit_size"] == 240
    rc, out = run(capsys, "weyl", "map", "--src", "0 1", "--dst", "5 6", "--format", "json")
    assert rc == 0 and json.loads(out)["verified"]


def test_verify_example_exit_codes(capsys, monkeypatch):
    rc, out = run(capsys, "verify-example", "5.4", "--format", "json")
    assert rc == 0 and json.loads(out)["examples"][0]["count"] == 12
    import dataclasses

    monkeypatch.setitem(FIXTURES, "bad", dataclasses.replace(FIXTURES["5.3:7"], id="bad", expected_ramified=False))
    rc, out = run(capsys, "verify-example", "bad", "--format", "json")
    assert rc == 1 and json.loads(out)["examples"][0]["status"] == "FAIL"
    rc, _ = run(capsys, "verify-example", "nope")
    assert rc == 2


@pytest.fixture
def ex54(tmp_path):
    p = tmp_path / "ex54.json"
    p.write_text(json.dumps({"field": EX_5_4.field, "points": [list(x) for x in EX_5_4.points]}))
    return str(p)


def test_count_and_interpolate(capsys, ex54):
    rc, out = run(capsys, "count", "--points", ex54, "--at", "2:0:1", "--format", "json")
    data = json.loads(out)
    assert rc == 0 and data["count"] == 12 and not data["on_ramification"] and not data["critical"]
    rc, out = run(capsys, "interpolate", "--points", ex54, "--class", "2;1,0,1,0,1,1,1,0", "--format", "json")
    assert rc == 0 and json.loads(out)["curve"]["degree"] == 2


def test_count_flags_critical(capsys, ex54, monkeypatch):
    monkeypatch.setattr(S, "theorem_bound", lambda char, ram: 11)
    rc, out = run(capsys, "count", "--points", ex54, "--at", "2:0:1", "--format", "json")
    assert rc == 1 and json.loads(out)["critical"]


def test_search_writes_jsonl(capsys, tmp_path):
    out = tmp_path / "r.jsonl"
    rc, text = run(
        capsys, "search", "--field", "gf:3:x^3+2x+1", "--trials", "200", "--target", "9",
        "--seed", "4", "--output", str(out), "--format", "json",
    )
    data = json.loads(text)
    assert rc == 0 and data["kept"] == len(out.read_text().splitlines()) > 0


def test_search_critical_exit(capsys, monkeypatch):
    monkeypatch.setattr(S, "theorem_bound", lambda char, ram: 5)
    rc, _ = run(capsys, "search", "--field", "gf:3:x^3+2x+1", "--trials", "300", "--target", "99")
    assert rc == 1


def test_check_identities_text(capsys):
    rc, out = run(capsys, "check-identities", "--which", "key1", "--samples", "10")
    assert rc == 0 and "KEY1-DETL" in out


def test_bad_field_is_reported(capsys):
    rc = main(["search", "--field", "q:12", "--trials", "1"])
    assert rc == 2
