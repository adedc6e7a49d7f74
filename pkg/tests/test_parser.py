import json

import pytest

from src.core.arrangement import Arrangement, Family, SubspaceB
from src.core.errors import ParseError, ValidationError
from src.models.graphs import Graph, Hypergraph, SignedGraph
from src.parser.document_parser import DocumentParser

K3_TEXT = json.dumps({"n": 3, "edges": [[1, 2], [1, 3], [2, 3]]})


@pytest.fixture
def parser() -> DocumentParser:
    return DocumentParser()


def test_graph_document(parser):
    doc = parser.parse(K3_TEXT)
    assert doc.kind == "graph"
    assert doc.document == Graph.complete(3)
    assert doc.config == {}


def test_bytes_are_decoded(parser):
    assert parser.parse(K3_TEXT.encode("utf-8")).kind == "graph"
    with pytest.raises(ParseError):
        parser.parse(b"\xff\xfe{")


def test_type_b_arrangement(parser):
    text = json.dumps({
        "ambient": {"family": "B", "n": 3},
        "subspaces": [
            {"zero": [3], "signed_blocks": [{"members": [1, 2], "signs": ["+", "-"]}]},
            {"zero": [], "signed_blocks": [{"members": [2, 3], "signs": [1, 1]}]},
        ],
    })
    doc = parser.parse(text)
    assert doc.kind == "arrangement"
    arr = doc.document
    assert isinstance(arr, Arrangement)
    assert arr.ambient.family is Family.B
    assert arr.subspaces[0] == SubspaceB(3, (3,), (((1, 2), (1, -1)),))


def test_hypergraph_and_signed_graph(parser):
    h = parser.parse('{"n": 4, "hyperedges": [[1, 2, 3], [3, 4]]}').document
    assert h == Hypergraph(4, ((1, 2, 3), (3, 4)))
    s = parser.parse('{"n": 2, "positive": [[1, 2]], "zero_vertices": [2]}').document
    assert s == SignedGraph(2, ((1, 2),), (), (2,))


def test_hypergraph_inclusion_is_rejected(parser):
    with pytest.raises(ValidationError) as err:
        parser.parse('{"n": 3, "hyperedges": [[1, 2], [1, 2, 3]]}')
    assert err.value.field == "hyperedges[1]"


def test_front_matter(parser, caplog):
    doc = parser.parse("---\nforce: true\nmember: 1\n---\n" + K3_TEXT)
    assert doc.config == {"force": True, "member": 1}
    assert doc.kind == "graph"
    assert not [r for r in caplog.records if r.levelname == "WARNING"]


def test_front_matter_threads_is_not_a_document_option(parser, caplog):
    parser.parse("---\nthreads: 2\n---\n" + K3_TEXT)
    warnings = [r for r in caplog.records if r.levelname == "WARNING"]
    assert len(warnings) == 1
    assert "threads" in warnings[0].getMessage()


def test_json_error_position_accounts_for_front_matter(parser):
    with pytest.raises(ParseError) as err:
        parser.parse("---\nforce: true\n---\n{bad")
    assert err.value.line == 4


def test_yaml_front_matter_error(parser):
    with pytest.raises(ParseError):
        parser.parse("---\nforce: [true\n---\n" + K3_TEXT)


@pytest.mark.parametrize("text,field", [
    ('{"vertices": 3}', "$"),
    ("[1, 2]", "$"),
    ('{"ambient": {"family": "C", "n": 3}, "subspaces": []}', "ambient.family"),
    ('{"ambient": {"family": "A", "n": 0}, "subspaces": []}', "ambient.n"),
    ('{"ambient": {"family": "A", "n": 3}, "subspaces": [{"blocks": [[1, 4]]}]}', "subspaces[0]"),
    ('{"ambient": {"family": "A", "n": 3}, "subspaces": [{"blocks": [["1", 2]]}]}',
     "subspaces[0].blocks[0]"),
    ('{"ambient": {"family": "B", "n": 2}, "subspaces": '
     '[{"signed_blocks": [{"members": [1, 2], "signs": ["+", "?"]}]}]}',
     "subspaces[0].signed_blocks[0].signs"),
    ('{"n": 3, "edges": [[1, 1]]}', "edges[0]"),
    ('{"n": "3", "edges": []}', "n"),
])
def test_validation_fields(parser, text, field):
    with pytest.raises(ValidationError) as err:
        parser.parse(text)
    assert err.value.field == field


def test_comparable_members_are_rejected(parser):
    text = json.dumps({"ambient": {"family": "A", "n": 3},
                       "subspaces": [{"blocks": [[1, 2]]}, {"blocks": [[1, 2, 3]]}]})
    with pytest.raises(ValidationError) as err:
        parser.parse(text)
    assert err.value.field == "subspaces[1]"
