import csv
import io
import json

import pytest

from rootlet_lab import export, ideals
from rootlet_lab.rootsys import build


@pytest.mark.parametrize("label", ["A2", "B3", "G2", "F4", "E6"])
def test_json_round_trip(label):
    at = ideals.atlas(build(label))
    data = json.loads(export.dumps(export.atlas_json(at)))
    assert export.load_atlas(data) == at


def test_json_round_trip_paper_numbering():
    at = ideals.atlas(build("E8"))
    data = json.loads(export.dumps(export.atlas_json(at, "paper")))
    assert data["root_system"]["theta"] == [2, 3, 4, 5, 6, 4, 2, 3]
    assert export.load_atlas(data) == at


def test_load_rejects_tampered_rootlet():
    data = export.atlas_json(ideals.atlas(build("B2")))
    data["ideals"][2]["rootlet"] = [1, 2]
    with pytest.raises(ValueError):
        export.load_atlas(data)


def test_load_rejects_tampered_roots():
    data = export.atlas_json(ideals.atlas(build("A3")))
    data["ideals"][3]["roots"] = data["ideals"][2]["roots"]
    with pytest.raises(ValueError):
        export.load_atlas(data)


def test_hasse_dot_a2():
    dot = export.hasse_dot(ideals.atlas(build("A2")))
    assert dot.count("[label=") == 4
    assert dot.count("->") == 3
    assert dot.startswith('digraph "Ab(A2)"')


def test_fibers_dot_clusters():
    dot = export.fibers_dot(ideals.atlas(build("B3")))
    assert dot.count("subgraph cluster_") == len(build("B3").long_positive_roots)


def test_outputs_are_deterministic():
    rs = build("D4")
    at = ideals.atlas(rs)
    assert export.hasse_dot(at) == export.hasse_dot(ideals.Atlas(rs))
    assert export.dumps(export.atlas_json(at)) == export.dumps(export.atlas_json(ideals.Atlas(rs)))


def test_table1_markdown_matches_golden():
    assert export.table1_markdown(build("E8")) == export.table1_reference()


def test_table1_csv():
    rows = list(csv.reader(io.StringIO(export.table1_csv(build("E8")))))
    assert rows[0] == ["i", "min_I_max", "min_I_min", "max_complement_I_max"]
    assert rows[1] == ["1", "12222101", "12222101", "11234322"]
    assert all(r[0] for r in rows)


def test_table1_only_for_e8():
    with pytest.raises(ValueError):
        export.table1_markdown(build("A2"))
    with pytest.raises(ValueError):
        export.table1_csv(build("E7"))
