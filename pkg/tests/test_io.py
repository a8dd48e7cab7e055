import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from linkdet.errors import DocumentError, MissingBlockError
from linkdet.generators import random_plane_map
from linkdet.io import (
    BUILTINS,
    EdgeRecord,
    GraphDocument,
    builtin,
    from_json,
    load_document,
    parse_document,
    parse_signs,
    serialize_document,
)


def doc_from_map(m, name=None, labels=False):
    edges = tuple(EdgeRecord(e.id, e.u, e.v, e.sign, f"e{e.id}" if labels else None) for e in m.graph.edges)
    return GraphDocument(m.vertex_count, edges, tuple(m.vertex_rotations), None, name)


@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_builtins_round_trip(name):
    doc = builtin(name)
    text = serialize_document(doc)
    assert text.endswith("\n") and text.count("\n") == 1
    assert parse_document(text) == doc
    assert serialize_document(parse_document(text)) == text


@settings(max_examples=100, deadline=None)
@given(seed=st.integers(0, 10**6), n=st.integers(0, 12), labels=st.booleans(),
       name=st.none() | st.text(max_size=8))
def test_random_documents_round_trip(seed, n, labels, name):
    doc = doc_from_map(random_plane_map(random.Random(seed), n), name, labels)
    again = parse_document(serialize_document(doc))
    assert again == doc
    assert parse_document(serialize_document(again)) == again


def test_signs_are_plus_minus_one_integers():
    doc = json.loads(serialize_document(builtin("p2")))
    assert [e["sign"] for e in doc["edges"]] == [1, -1]
    assert doc["version"] == 1


def test_fig5_fixture():
    doc = builtin("fig5")
    assert doc.labels == list("abcdefgh")
    assert [(e.u, e.v) for e in doc.edges] == [(0, 1), (0, 1), (0, 2), (0, 3), (3, 2), (1, 2), (1, 4), (4, 2)]
    assert doc.plane_map().face_count == 5
    assert doc.involution is None


def test_missing_blocks():
    doc = GraphDocument(2, (EdgeRecord(0, 0, 1, 1),))
    with pytest.raises(MissingBlockError):
        doc.plane_map()
    with pytest.raises(MissingBlockError):
        builtin("fig5").involution_block()


@pytest.mark.parametrize("text", [
    "{not json",
    "[]",
    '{"vertex_count": 1, "edges": []}',
    '{"version": 2, "vertex_count": 1, "edges": []}',
    '{"version": 1, "vertex_count": 0, "edges": []}',
    '{"version": 1, "vertex_count": 2, "edges": [{"id": 0, "u": 0, "v": 1, "sign": 0}]}',
    '{"version": 1, "vertex_count": 2, "edges": [{"id": 0, "u": 0, "v": 2, "sign": 1}]}',
    '{"version": 1, "vertex_count": 2, "edges": [{"id": 1, "u": 0, "v": 1, "sign": 1}]}',
    '{"version": 1, "vertex_count": 2, "edges": [{"id": 0, "u": 0, "v": 1}]}',
    '{"version": 1, "vertex_count": 2, "edges": [{"id": 0, "u": 0, "v": 1, "sign": true}]}',
    '{"version": 1, "vertex_count": 1, "edges": [], "colour": "red"}',
    '{"version": 1, "vertex_count": 2, "edges": [], "rotation": [[]]}',
    '{"version": 1, "vertex_count": 2, "edges": [], "involution": {"vertices": [1, 0]}}',
])
def test_malformed_documents(text):
    with pytest.raises(DocumentError):
        parse_document(text)


def test_involution_forms():
    base = builtin("p2").to_json()
    assert from_json(base).involution_block() == {"vertices": (1, 0), "edges": (1, 0)}
    base["involution"] = {"medial_darts": [0, 1, 2, 3, 4, 5, 6, 7]}
    assert from_json(base).involution_block() == {"medial_darts": tuple(range(8))}


def test_parse_signs():
    assert parse_signs("+-+", 3) == [1, -1, 1]
    assert parse_signs("1,-1", 2) == [1, -1]
    for bad in ("+-", "+x+", "1,2,1"):
        with pytest.raises(DocumentError):
            parse_signs(bad, 3)


def test_with_signs():
    doc = builtin("fig5").with_signs([-1, -1] + [1] * 6)
    assert doc.graph().signs == (-1, -1, 1, 1, 1, 1, 1, 1)
    assert doc.rotation == builtin("fig5").rotation


def test_load_document(tmp_path):
    path = tmp_path / "t.json"
    path.write_text(serialize_document(builtin("triangle")))
    assert load_document(str(path)) == builtin("triangle")
    assert load_document("builtin:loop") == builtin("loop")
    with pytest.raises(DocumentError):
        load_document("builtin:nothing")
    with pytest.raises(DocumentError):
        load_document(str(tmp_path / "missing.json"))
