import random
from collections import Counter
from pathlib import Path

import pytest

from src.core.arrangement import Ambient, Family, subspace_leq
from src.core.errors import ParseError, ValidationError
from src.models.catalog import (
    all_graphs, all_signed_graphs, catalog_from_mapping, default_catalog, load_catalog,
    random_antichain, random_hyperplane_antichain, random_subspace,
)
from src.models.graphs import Graph

K3_DOC = {"n": 3, "edges": [[1, 2], [1, 3], [2, 3]]}


def test_exhaustive_graphs():
    graphs = all_graphs(3)
    assert len(graphs) == 1 + 7
    assert Graph.complete(3) in graphs
    assert all(g.edges for g in graphs)


def test_exhaustive_signed_graphs():
    assert len(all_signed_graphs(1)) == 1
    assert len(all_signed_graphs(2)) == 1 + 15


@pytest.mark.parametrize("seed", range(10))
def test_random_antichains_are_antichains(seed):
    rng = random.Random(seed)
    for amb in (Ambient(Family.A, 5), Ambient(Family.B, 3)):
        a = random_antichain(amb, rng, 4)
        assert 1 <= len(a) <= 4
        for i, s in enumerate(a.subspaces):
            assert s.dim >= 1
            assert s != amb.full_space()
            for t in a.subspaces[i + 1:]:
                assert not subspace_leq(s, t) and not subspace_leq(t, s)


def test_random_subspace_needs_room():
    with pytest.raises(ValueError):
        random_subspace(Ambient(Family.A, 2), random.Random(0))


def test_random_hyperplane_antichain():
    a = random_hyperplane_antichain(Ambient(Family.B, 3), random.Random(3))
    assert a.is_hyperplane_arrangement()
    assert len(a) >= 1


def test_default_catalog_is_reproducible():
    small = dict(max_graph_n=3, max_signed_n=2, hypergraphs=4, random_antichains=4, seed=7)
    first = default_catalog(**small)
    second = default_catalog(**small)
    assert first == second
    assert not first.is_empty()
    assert first.eulerian_a == [2, 3, 4, 5, 6]
    assert first.eulerian_b == [1, 2, 3, 4]
    assert len(first.graphs) >= 8


def test_default_catalog_draws_antichains_per_family():
    cat = default_catalog(max_graph_n=2, max_signed_n=1, hypergraphs=0, seed=3)
    assert Counter(a.ambient.family for a in cat.antichains) == {Family.A: 50, Family.B: 50}
    assert Counter(a.ambient.family for a in cat.hyperplane_antichains) == {Family.A: 50, Family.B: 50}
    assert {a.ambient.n for a in cat.antichains if a.ambient.family is Family.A} <= {3, 4, 5}
    assert {a.ambient.n for a in cat.antichains if a.ambient.family is Family.B} <= {2, 3}


def test_default_catalog_covers_every_graph_on_five_vertices():
    from src.core.engine import ArrLabEngine
    cat = ArrLabEngine().catalog()
    assert sum(1 for g in cat.graphs if g.n == 5) >= 2 ** 10 - 1
    assert len(cat.antichains) == 100
    small = default_catalog(max_graph_n=2, max_signed_n=1, hypergraphs=0, budget_a=2, budget_b=1)
    assert small.antichains == [] and small.hyperplane_antichains == []


def test_catalog_from_mapping():
    cat = catalog_from_mapping({
        "graphs": [K3_DOC],
        "arrangements": [{"ambient": {"family": "B", "n": 2},
                          "subspaces": [{"zero": [1], "signed_blocks": []}]}],
        "eulerian": {"A": [3], "B": [2]},
        "fixtures": [{"document": K3_DOC, "f_vector": [1, 7], "label": "mutation"}],
    })
    assert cat.graphs == [Graph.complete(3)]
    assert len(cat.antichains) == 1
    assert len(cat.hyperplane_antichains) == 1
    assert cat.eulerian_a == [3] and cat.eulerian_b == [2]
    assert cat.fixtures[0].f_vector.counts == (1, 7)
    assert cat.fixtures[0].label == "mutation"
    assert cat.size() == 6


def test_catalog_errors_carry_the_path():
    with pytest.raises(ValidationError) as err:
        catalog_from_mapping({"graphs": [K3_DOC, {"n": 3, "edges": [[1, 4]]}]})
    assert err.value.field == "graphs[1].edges[0]"
    with pytest.raises(ValidationError) as err:
        catalog_from_mapping({"fixtures": [{"document": K3_DOC}]})
    assert err.value.field == "fixtures[0]"
    with pytest.raises(ValidationError):
        catalog_from_mapping([1, 2])


def test_load_catalog(tmp_path):
    path = tmp_path / "catalogue.yaml"
    path.write_text(
        "graphs:\n"
        "  - {n: 3, edges: [[1, 2], [2, 3]]}\n"
        "eulerian:\n"
        "  A: [2, 3]\n",
        encoding="utf-8",
    )
    cat = load_catalog(str(path))
    assert cat.graphs == [Graph.path(3)]
    assert cat.eulerian_a == [2, 3]

    broken = tmp_path / "broken.yaml"
    broken.write_text("graphs: [\n  - {n: 3\n", encoding="utf-8")
    with pytest.raises(ParseError) as err:
        load_catalog(str(broken))
    assert err.value.line is not None


def test_shipped_catalogue_loads():
    root = Path(__file__).resolve().parent.parent
    cat = load_catalog(str(root / "exemples" / "catalogue.yaml"))
    assert len(cat.graphs) == 2
    assert len(cat.antichains) == 2
    assert len(cat.hyperplane_antichains) == 1
    assert cat.fixtures[0].f_vector.counts == (1, 7)
