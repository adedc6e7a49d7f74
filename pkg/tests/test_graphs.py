import pytest

from src.core.arrangement import SubspaceA, SubspaceB, char_poly
from src.core.errors import EmptyEdgeSet, NotHyperplanes, ValidationError
from src.core.polyseries import IntPolynomial, X
from src.models.graphs import (
    Graph, Hypergraph, SignedGraph, acyclic_orientations, chromatic_poly_brute,
    graph_to_arrangement, hypergraph_to_arrangement, proper_coloring_count, region_count,
    signed_coloring_count, signed_graph_to_arrangement, to_arrangement,
)


def test_graph_normalizes_edges():
    g = Graph(3, ((2, 1), (1, 2), (3, 1)))
    assert g.edges == ((1, 2), (1, 3))
    assert g.to_json() == {"n": 3, "edges": [[1, 2], [1, 3]]}
    assert g.to_networkx().number_of_nodes() == 3


@pytest.mark.parametrize("edges,field", [(((1, 1),), "edges[0]"), (((1, 2), (2, 4)), "edges[1]")])
def test_graph_rejects_bad_edges(edges, field):
    with pytest.raises(ValidationError) as err:
        Graph(3, edges)
    assert err.value.field == field


def test_hypergraph_antichain_rule():
    with pytest.raises(ValidationError) as err:
        Hypergraph(3, ((1, 2), (1, 2, 3)))
    assert err.value.field == "hyperedges[1]"
    with pytest.raises(ValidationError):
        Hypergraph(3, ((1,),))


def test_arrangements_of_graph_like_objects(k3):
    a = graph_to_arrangement(k3)
    assert len(a) == 3
    assert a.subspaces[0] == SubspaceA.pair(3, 1, 2)
    h = hypergraph_to_arrangement(Hypergraph(4, ((1, 2, 3), (3, 4))))
    assert h.subspaces[0] == SubspaceA(4, ((1, 2, 3),))
    s = signed_graph_to_arrangement(SignedGraph(2, (), ((1, 2),), (1,)))
    assert s.subspaces == (SubspaceB.pair(2, 1, 2, -1), SubspaceB.coordinate(2, 1))
    assert to_arrangement(a) is a


def test_empty_edge_sets():
    with pytest.raises(EmptyEdgeSet):
        graph_to_arrangement(Graph(3))
    with pytest.raises(EmptyEdgeSet):
        hypergraph_to_arrangement(Hypergraph(3))
    with pytest.raises(EmptyEdgeSet):
        signed_graph_to_arrangement(SignedGraph(2))


def test_k3_oracles(k3, k3_arrangement):
    assert proper_coloring_count(k3, 3) == 6
    assert chromatic_poly_brute(k3) == IntPolynomial((0, 2, -3, 1))
    assert X * char_poly(k3_arrangement) == chromatic_poly_brute(k3)
    assert acyclic_orientations(k3) == 6
    assert region_count(k3_arrangement) == 6


@pytest.mark.parametrize("g,count", [
    (Graph.path(3), 4),
    (Graph.cycle(4), 14),
    (Graph.complete(4), 24),
    (Graph(4, ((1, 2), (3, 4))), 4),
])
def test_regions_equal_acyclic_orientations(g, count):
    assert acyclic_orientations(g) == count
    assert region_count(graph_to_arrangement(g)) == count


def test_hypergraph_chromatic_polynomial():
    h = Hypergraph(3, ((1, 2, 3),))
    assert chromatic_poly_brute(h) == IntPolynomial((0, -1, 0, 1))
    assert X * char_poly(hypergraph_to_arrangement(h)) == chromatic_poly_brute(h)


def test_signed_colorings():
    zero = SignedGraph(1, (), (), (1,))
    assert signed_coloring_count(zero, 1) == 2
    assert char_poly(signed_graph_to_arrangement(zero))(3) == 2
    both = SignedGraph(2, ((1, 2),), ((1, 2),))
    chi = char_poly(signed_graph_to_arrangement(both))
    assert [chi(2 * m + 1) for m in range(4)] == [signed_coloring_count(both, m) for m in range(4)]


def test_region_count_requires_hyperplanes(s4_codim2):
    with pytest.raises(NotHyperplanes):
        region_count(s4_codim2)
