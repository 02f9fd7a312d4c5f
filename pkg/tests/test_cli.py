import json

import pytest

from rootlet_lab import export, ideals
from rootlet_lab.cli import main, parse_roots
from rootlet_lab.rootsys import build


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "E8")
    assert code == 0 and out.startswith("256 ideals, 120 long-root fibers")
    code, out, _ = run(capsys, "enumerate", "A1", "--out", str(tmp_path / "a1.json"))
    assert code == 0 and out.startswith("2 ideals")
    data = json.loads((tmp_path / "a1.json").read_text())
    assert export.load_atlas(data) == ideals.atlas(build("A1"))


def test_bad_type_is_usage_error(capsys):
    code, _, err = run(capsys, "enumerate", "Z9")
    assert code == 1 and "error" in err


def test_missing_arguments_exit_one(capsys):
    with pytest.raises(SystemExit) as e:
        main(["join", "A3"])
    assert e.value.code == 1


def test_join(capsys):
    assert run(capsys, "join", "A3", "1,0,0", "0,0,1")[:2] == (0, "1,1,1 (bridge: 0,1,0)\n")
    code, out, _ = run(capsys, "join", "A3", "alpha1", "α3", "--format", "json")
    assert json.loads(out) == {"join": [1, 1, 1], "mode": "disjoint_bridge", "bridge": [0, 1, 0]}
    assert run(capsys, "join", "A2", "1,0", "1,1")[1] == "1,1 (comparable)\n"


def test_join_rejects_non_roots(capsys):
    code, _, err = run(capsys, "join", "A3", "1,0,1", "0,0,1")
    assert code == 1 and "not a positive root" in err


def test_rootlet(capsys):
    code, out, _ = run(capsys, "rootlet", "B2", "θ,α1+α2")
    assert code == 0 and out.split()[0] == "α1"
    assert run(capsys, "rootlet", "B2", "theta", "alpha1+alpha2")[1] == out


def test_rootlet_requires_ideal_unless_closed(capsys):
    code, _, err = run(capsys, "rootlet", "B2", "α1")
    assert code == 1 and "(1, 1)" in err
    code, out, _ = run(capsys, "rootlet", "B2", "α1", "--close")
    assert code == 0 and out.startswith("α1")


def test_non_abelian_set_names_the_pair(capsys):
    code, _, err = run(capsys, "centralizer", "B2", "theta,α1+α2,α1,α2")
    assert code == 1 and "is a root" in err


def test_centralizer(capsys):
    code, out, _ = run(capsys, "centralizer", "B2", "θ,α1+α2,α1")
    assert code == 0 and out.splitlines()[0] == "self-centralising; P3"
    code, out, _ = run(capsys, "centralizer", "A2", "theta")
    assert "toral dimension: 1" in out


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "A2", "hasse", "dot")
    assert code == 0 and out.count("[label=") == 4
    code, _, err = run(capsys, "export", "A2", "table1", "md")
    assert code == 1 and "E8" in err
    target = tmp_path / "t1.md"
    assert run(capsys, "export", "E8", "table1", "md", "--out", str(target))[0] == 0
    assert target.read_text(encoding="utf-8") == export.table1_reference()


def test_export_is_deterministic(capsys):
    first = run(capsys, "export", "D4", "fibers", "json")[1]
    assert run(capsys, "export", "D4", "fibers", "json")[1] == first


def test_verify_filters(capsys):
    code, out, _ = run(capsys, "verify", "E8", "--filter", "table1")
    assert code == 0 and "pass" in out and "table1" in out
    code, out, _ = run(capsys, "verify", "B2", "--filter", "fiber-singleton")
    assert code == 0 and "reported" in out and "|Ab_1,0| = 2" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "G2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data[0]["type"] == "G2"
    assert {c["status"] for c in data[0]["checks"]} <= {"pass", "reported", "skipped"}


def test_parse_roots_forms():
    e8 = build("E8")
    assert parse_roots(e8, ["23456423"], "paper") == [e8.theta]
    assert parse_roots(e8, ["2,3,4,5,6,4,2,3"], "paper") == [e8.theta]
    b2 = build("B2")
    assert parse_roots(b2, ["1,2"]) == [(1, 2)]
    assert parse_roots(b2, ["theta,alpha1"]) == [(1, 2), (1, 0)]
    assert parse_roots(b2, ["α1+2α2"]) == [(1, 2)]
