import random
from itertools import combinations

import pytest

from src.core.arrangement import Ambient, Arrangement, Family, SubspaceA, deletion, restriction
from src.core.complex import AbstractComplex, face_from_vertices, face_in_link, lift_face, link_f_vector
from src.core.errors import (
    EmptyArrangement, IndexOutOfRange, NotAMember, NotAPermutation, NotAnOrderFilter, NotHyperplanes,
    NotPure,
)
from src.core.shelling import (
    antipode_index, chambers_of, complement_classes, first_violation, is_shelling_order,
    linear_extension, poset_of_regions, random_linear_extension, separation_set, shell_coxeter,
    shell_link,
)
from src.models.catalog import all_graphs, all_signed_graphs, random_hyperplane_antichain
from src.models.graphs import Graph, SignedGraph, graph_to_arrangement, signed_graph_to_arrangement


def hexagon() -> AbstractComplex:
    return AbstractComplex(6, tuple(frozenset({i, (i + 1) % 6}) for i in range(6)))


@pytest.mark.parametrize("family,n,count", [("A", 3, 6), ("B", 2, 8), ("A", 4, 24), ("B", 3, 48)])
def test_chamber_counts(family, n, count):
    assert len(chambers_of(Ambient(Family(family), n))) == count


def test_antipode_and_separation():
    chambers = chambers_of(Ambient(Family.A, 3))
    j = antipode_index(chambers, 0)
    assert len(separation_set(chambers[0], chambers[j])) == 3
    assert antipode_index(chambers, j) == 0
    with pytest.raises(NotAPermutation):
        antipode_index(chambers[:1], 0)


@pytest.mark.parametrize("family,n,sizes", [("A", 3, [1, 2, 2, 1]), ("B", 2, [1, 2, 2, 2, 1])])
def test_rank_sizes(family, n, sizes):
    p = poset_of_regions(Ambient(Family(family), n), 0)
    assert p.rank_sizes() == sizes


def test_poset_order():
    p = poset_of_regions(Ambient(Family.A, 3), 0)
    top = p.ell.index(max(p.ell))
    assert all(p.leq(p.base, i) for i in range(len(p.chambers)))
    assert all(p.leq(i, top) for i in range(len(p.chambers)))
    assert p.is_order_filter([top])
    assert not p.is_order_filter([p.base])
    with pytest.raises(NotAnOrderFilter):
        linear_extension(p, [p.base])


def test_preferred_filter_goes_last():
    p = poset_of_regions(Ambient(Family.A, 3), 0)
    top = p.ell.index(max(p.ell))
    order = linear_extension(p, [top])
    assert order.facets[-1] == p.complex.facets[top]
    assert is_shelling_order(order.complex, order.facets)


def test_hexagon_orders():
    c = hexagon()
    assert first_violation(c, c.facets) is None
    jumpy = [c.facets[0], c.facets[3]] + [c.facets[i] for i in (1, 2, 4, 5)]
    assert first_violation(c, jumpy) == 2


def test_verifier_rejects_bad_input():
    c = hexagon()
    with pytest.raises(NotAPermutation):
        first_violation(c, c.facets[:-1])
    with pytest.raises(NotAPermutation):
        first_violation(c, c.facets[:-1] + (c.facets[0],))
    impure = AbstractComplex(3, (frozenset({0, 1}), frozenset({2})))
    with pytest.raises(NotPure):
        first_violation(impure, impure.facets)


@pytest.mark.parametrize("family,n", [("A", 3), ("A", 4), ("B", 2), ("B", 3)])
def test_coxeter_complex_is_shelled(family, n):
    order = shell_coxeter(Ambient(Family(family), n))
    assert len(order) == len(chambers_of(Ambient(Family(family), n)))
    assert is_shelling_order(order.complex, order.facets)


@pytest.mark.parametrize("seed", range(5))
def test_random_linear_extensions_shell(seed):
    rng = random.Random(seed)
    for amb in (Ambient(Family.A, 4), Ambient(Family.B, 3)):
        p = poset_of_regions(amb, rng.randrange(len(chambers_of(amb))))
        order = random_linear_extension(p, rng)
        assert is_shelling_order(order.complex, order.facets)


def test_shell_k3(k3_arrangement):
    order = shell_link(k3_arrangement)
    assert len(order) == 6
    assert is_shelling_order(order.complex, order.facets)


def test_complement_classes_k3(k3_arrangement):
    classes = complement_classes(k3_arrangement, SubspaceA.pair(3, 1, 2))
    assert sorted(len(c) for c in classes) == [1, 1]
    with pytest.raises(NotAMember):
        complement_classes(k3_arrangement, SubspaceA.pair(4, 1, 2))


def test_complement_classes_split_hexagon():
    a = graph_to_arrangement(Graph(4, ((1, 2), (3, 4))))
    classes = complement_classes(a, SubspaceA.pair(4, 1, 2))
    assert sorted(len(c) for c in classes) == [3, 3]


@pytest.mark.parametrize("arrangement", [
    graph_to_arrangement(Graph(4, ((1, 2),))),
    graph_to_arrangement(Graph(4, ((1, 2), (3, 4)))),
    graph_to_arrangement(Graph.path(4)),
    graph_to_arrangement(Graph.complete(4)),
    signed_graph_to_arrangement(SignedGraph(2, ((1, 2),), ((1, 2),), (1, 2))),
    signed_graph_to_arrangement(SignedGraph(3, ((1, 2),), ((2, 3),), (3,))),
    graph_to_arrangement(Graph(2, ((1, 2),))),
])
def test_link_shellings(arrangement):
    order = shell_link(arrangement)
    assert len(order) == len(order.complex.facets)
    assert first_violation(order.complex, order.facets) is None
    assert order.complex.f_vector() == link_f_vector(arrangement)


def test_shell_link_requires_hyperplanes(s4_codim2):
    with pytest.raises(NotHyperplanes):
        shell_link(s4_codim2)


def test_shell_link_rejects_empty_arrangement():
    with pytest.raises(EmptyArrangement):
        shell_link(Arrangement(Ambient(Family.A, 3), ()))


def test_base_chamber_out_of_range():
    with pytest.raises(IndexOutOfRange):
        poset_of_regions(Ambient(Family.A, 3), 6)
    with pytest.raises(IndexOutOfRange):
        poset_of_regions(Ambient(Family.B, 2), -1)


@pytest.mark.slow
@pytest.mark.parametrize("g", all_graphs(5, min_n=3),
                         ids=lambda g: f"n{g.n}:" + ",".join(f"{i}{j}" for i, j in g.edges))
def test_every_small_graph_link_is_shelled(g):
    order = shell_link(graph_to_arrangement(g))
    assert is_shelling_order(order.complex, order.facets)


def test_antipodal_ranks():
    for amb in (Ambient(Family.A, 4), Ambient(Family.B, 2)):
        p = poset_of_regions(amb, 3)
        total = len(amb.hyperplanes())
        chambers = list(p.chambers)
        for i in range(len(chambers)):
            j = antipode_index(chambers, i)
            assert p.ell[i] + p.ell[j] == total
            assert len(separation_set(chambers[i], chambers[j])) == total


@pytest.mark.parametrize("arrangement", [
    graph_to_arrangement(Graph(4, ((1, 2), (3, 4)))),
    graph_to_arrangement(Graph.complete(4)),
    signed_graph_to_arrangement(SignedGraph(3, ((1, 2),), ((2, 3),), (3,))),
])
def test_facets_of_different_classes_meet_in_the_deletion(arrangement):
    last = arrangement.subspaces[arrangement.canonical_order()[-1]]
    rest = deletion(arrangement, arrangement.subspaces.index(last))
    chambers = chambers_of(restriction(arrangement, last).ambient)
    classes = complement_classes(arrangement, last)
    for c1, c2 in combinations(classes, 2):
        for i, j in ((c1[0], c2[0]), (c1[-1], c2[-1])):
            shared = (lift_face(last, chambers[i].facet).vertices()
                      & lift_face(last, chambers[j].facet).vertices())
            face = face_from_vertices(arrangement.ambient, shared)
            assert face is None or face_in_link(face, rest)


@pytest.mark.slow
@pytest.mark.parametrize("s", all_signed_graphs(3), ids=str)
def test_every_small_signed_graph_link_is_shelled(s):
    order = shell_link(signed_graph_to_arrangement(s))
    assert is_shelling_order(order.complex, order.facets)


@pytest.mark.slow
@pytest.mark.parametrize("seed", range(50))
def test_random_hyperplane_antichains_are_shelled(seed):
    rng = random.Random(seed)
    for amb in (Ambient(Family.A, 5), Ambient(Family.B, 3)):
        order = shell_link(random_hyperplane_antichain(amb, rng))
        assert is_shelling_order(order.complex, order.facets)
