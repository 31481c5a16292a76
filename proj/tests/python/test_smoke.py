import json

import pytest

import abelgraph


THETA = json.dumps(
    {
        "vertices": [{"id": "C1", "genus": 0}, {"id": "C2", "genus": 0}],
        "edges": [
            {"id": "e1", "ends": ["C1", "C2"]},
            {"id": "e2", "ends": ["C1", "C2"]},
            {"id": "e3", "ends": ["C1", "C2"]},
        ],
    }
)

STAR = json.dumps(
    {
        "vertices": [
            {"id": "A", "genus": 1},
            {"id": "B", "genus": 1},
            {"id": "C", "genus": 1},
            {"id": "X", "genus": 0},
        ],
        "edges": [
            {"id": "eA", "ends": ["X", "A"]},
            {"id": "eB", "ends": ["X", "B"]},
            {"id": "eC", "ends": ["X", "C"]},
        ],
    }
)

DOUBLE = json.dumps(
    {
        "vertices": [{"id": "A", "genus": 1}, {"id": "B", "genus": 2}],
        "edges": [{"id": "e1", "ends": ["A", "B"]}, {"id": "e2", "ends": ["A", "B"]}],
    }
)


def test_parse_and_shape():
    g = abelgraph.Graph(THETA)
    assert g.genus == 2
    assert g.components == 2
    assert g.nodes == 3
    assert g.stability == "stable"
    assert g.component_ids() == ["C1", "C2"]
    assert g.node_ids() == ["e1", "e2", "e3"]
    assert "genus=2" in repr(g)


def test_serialization_round_trip():
    g = abelgraph.Graph(THETA)
    text = g.to_json()
    assert abelgraph.Graph(text).to_json() == text


def test_bad_input_raises_value_error():
    with pytest.raises(ValueError):
        abelgraph.Graph("{nope")
    with pytest.raises(ValueError):
        abelgraph.Graph('{"vertices": [], "edges": []}')


def test_class_group():
    g = abelgraph.Graph(THETA)
    info = g.class_group()
    assert info["invariant_factors"] == [3]
    assert info["order"] == 3
    assert g.spanning_trees() == 3


def test_reduction_and_class_comparison():
    g = abelgraph.Graph(THETA)
    assert g.canonical_representative([1, -1]) == [-2, 2]
    assert g.classes_equal([1, -1], [-2, 2])
    assert not g.classes_equal([1, -1], [-1, 1])
    with pytest.raises(ValueError):
        g.classes_equal([1, -1], [1, 0])


def test_balanced_and_generality():
    g = abelgraph.Graph(THETA)
    b = g.balanced(1)
    assert len(b["B"]) == 4
    assert len(b["B_tilde"]) == 2
    assert b["d_general"] is False
    assert b["witness"] == {"C1": -1, "C2": 2}
    assert g.is_general(0)
    assert not g.is_general(1)


def test_abel_image_and_multidegree():
    g = abelgraph.Graph(THETA)
    assert g.abel_multidegree("C1") == {"C1": 1, "C2": 0}
    img = g.abel_image(node="e1")
    assert img["host"]["kind"] == "blowup"
    assert img["boundary"] is True
    assert img["multidegree"] == {"C1": 0, "C2": 0, "E_e1": 1}
    smooth = g.abel_image(component="C2")
    assert smooth["multidegree"] == {"C1": 0, "C2": 1}
    with pytest.raises(ValueError):
        g.abel_image()
    with pytest.raises(ValueError):
        g.abel_image(component="C1", node="e1")


def test_image_comparison_and_fibers():
    star = abelgraph.Graph(STAR)
    assert star.images_equal(abelgraph.Point.smooth("X"), abelgraph.Point.node("eA"))
    assert not star.images_equal(abelgraph.Point.smooth("A"), abelgraph.Point.node("eA"))
    classes = star.fibers()["classes"]
    assert len(classes) == 4
    assert classes[0] == {"components": ["X"], "nodes": ["eA", "eB", "eC"]}
    with pytest.raises(ValueError):
        abelgraph.Graph(THETA).fibers()


def test_vine_closed_forms():
    g = abelgraph.Graph(DOUBLE)
    report = g.vine(degree=2, a0=2)
    assert report["m"] == 0
    assert report["r"] == [0, 1, 0]
    assert report["multidegree"] == {"A": 0, "B": 2}
    assert report["equals_balanced"] is True


def test_analysis_report():
    g = abelgraph.Graph(THETA)
    report = g.analysis(degrees=[0, 2], base="C2")
    assert report["graph"]["genus"] == 2
    assert set(report["balanced"]) == {"0", "2"}
    assert report["abel"]["one_general"] is False
    with pytest.raises(ValueError):
        g.analysis(base="NOPE")


def test_blow_up():
    g = abelgraph.Graph(THETA).blow_up("e1")
    assert g.components == 3
    assert g.genus == 2
    assert g.stability == "quasistableNotStable"
    assert "E_e1" in g.component_ids()


def test_corpus_generation():
    graphs = abelgraph.generate_corpus(seed=3, count=5, genus_max=4, vertices_max=5)
    assert len(graphs) == 5
    assert all(g.stability == "stable" for g in graphs)
    assert all(2 <= g.genus <= 4 for g in graphs)
    again = abelgraph.generate_corpus(seed=3, count=5, genus_max=4, vertices_max=5)
    assert [g.to_json() for g in graphs] == [h.to_json() for h in again]


def test_enumeration_limit():
    assert abelgraph.enumeration_limit() == 16
    try:
        abelgraph.set_enumeration_limit(1)
        with pytest.raises(ValueError):
            abelgraph.Graph(THETA).balanced(1)
    finally:
        abelgraph.set_enumeration_limit(16)
