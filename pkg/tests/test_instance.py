import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unmixed import InstanceDocument, InstanceError, parse_instance, write_instance
from unmixed.generators import gen_matched, gen_starstar
from unmixed.instance import canonical, document_from, load_instance


def test_nine_vertex_fixture(fixtures_dir):
    doc = load_instance(fixtures_dir / "nine_vertex.json")
    assert len(doc.vertices) == 9 and len(doc.edges) == 5
    assert doc.partition == (("a", "b", "c"), ("e", "f", "d"), ("h", "i", "g"))
    assert doc.matching_of().perfect


def test_fixtures_are_canonical(fixtures_dir):
    for path in sorted(fixtures_dir.glob("*.json")):
        text = path.read_text()
        assert write_instance(parse_instance(text)) == text, path.name


def test_minimal_document():
    doc = parse_instance('{"schema": "unmixed-instance/1", "vertices": ["x", "y"], "edges": [["x", "y"]]}')
    assert doc.edges == (("x", "y"),)
    assert doc.partition is None and doc.matching is None


def _doc(**over):
    base = {"schema": "unmixed-instance/1", "vertices": ["a", "b", "c", "d"],
            "edges": [["a", "b"], ["c", "d"]]}
    base.update(over)
    return json.dumps(base)


@pytest.mark.parametrize("text,where", [
    (_doc(partition=[["a", "b"], ["c", "z"]]), "partition[1][1]"),
    (_doc(partition=[["a", "b"], ["c", "a"]]), "partition[1][1]"),
    (_doc(partition=[["a", "b"]]), "partition"),
    (_doc(edges=[["a", "q"]]), "edges[0][1]"),
    (_doc(edges=[[]]), "edges[0]"),
    (_doc(vertices=["a", "a"]), "vertices[1]"),
    (_doc(matching=[["a", "b"], ["b", "c"]]), "matching[1]"),
    (_doc(schema="other/9"), "schema"),
    (_doc(extra=1), "unknown field"),
    ('{"schema": "unmixed-instance/1",\n "vertices": [}', "line 2"),
])
def test_diagnostics(text, where):
    with pytest.raises(InstanceError, match=where.replace("[", r"\[").replace("]", r"\]")):
        parse_instance(text)


def test_write_canonicalizes():
    doc = InstanceDocument(("a", "b", "c"), (("b", "a"), ("c", "b"), ("a", "b")))
    text = write_instance(doc)
    again = parse_instance(text)
    assert again.edges == (("a", "b"), ("b", "c"))
    assert again == canonical(doc)
    assert write_instance(again) == text


def test_document_from_hypergraph():
    doc = gen_starstar(2, 3, 2, 0.3, 2)
    H = doc.hypergraph()
    assert document_from(H, doc.labeling(H), metadata=doc.metadata) == doc


names = st.lists(st.text("abcxyz019_", min_size=1, max_size=3), min_size=1, max_size=7, unique=True)


@st.composite
def documents(draw):
    vs = draw(names)
    edges = draw(st.lists(st.lists(st.sampled_from(vs), min_size=1, unique=True), max_size=6))
    meta = draw(st.none() | st.dictionaries(st.sampled_from(["seed", "n"]), st.integers(0, 99)))
    return InstanceDocument(tuple(vs), tuple(map(tuple, edges)), None, None, meta)


@settings(max_examples=80)
@given(documents())
def test_round_trip(doc):
    text = write_instance(doc)
    parsed = parse_instance(text)
    assert parsed == canonical(doc)
    assert write_instance(parsed) == text
    assert parse_instance(write_instance(parsed)) == parsed


@pytest.mark.parametrize("gen", [lambda: gen_starstar(3, 4, 3, 0.3, 9), lambda: gen_matched(3, 3, 0.2, 9)])
def test_generated_round_trip(gen):
    doc = gen()
    assert parse_instance(write_instance(doc)) == doc
