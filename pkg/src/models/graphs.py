"""
Graphes, hypergraphes et graphes signés.
- Graph / Hypergraph : arrangements Ĝ plongés dans S_n
- SignedGraph : arrangements Ĝ plongés dans B_n (sommets nuls = hyperplans x_i = 0)
Oracles par force brute, volontairement naïfs : colorations propres,
orientations acycliques, nombre de régions.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterable, List, Tuple, Union

import networkx as nx

from ..core.arrangement import Ambient, Arrangement, Family, SubspaceA, SubspaceB
from ..core.complex import face_sign
from ..core.errors import EmptyEdgeSet, NotHyperplanes, ValidationError
from ..core.polyseries import IntPolynomial, poly_interpolate
from ..core.shelling import chambers_of

log = logging.getLogger(__name__)

Edge = Tuple[int, int]


def _normalize_edges(n: int, edges: Iterable[Iterable[int]], name: str) -> Tuple[Edge, ...]:
    out = set()
    for idx, edge in enumerate(edges):
        pair = tuple(int(v) for v in edge)
        if len(pair) != 2:
            raise ValidationError("une arête a exactement deux extrémités", field=f"{name}[{idx}]")
        i, j = sorted(pair)
        if i == j:
            raise ValidationError(f"boucle sur le sommet {i}", field=f"{name}[{idx}]")
        if i < 1 or j > n:
            raise ValidationError(f"sommet hors de [1, {n}]", field=f"{name}[{idx}]")
        out.add((i, j))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Graph:
    """Graphe simple sur [n] ; arêtes {i, j} avec i < j."""
    n: int
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("n doit être ≥ 1", field="n")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges, "edges"))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, tuple(combinations(range(1, n + 1), 2)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(1, self.n + 1))
        g.add_edges_from(self.edges)
        return g

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


@dataclass(frozen=True)
class Hypergraph:
    """Hypergraphe sur [n] ; hyperarêtes de taille ≥ 2, sans inclusion entre elles."""
    n: int
    hyperedges: Tuple[Tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("n doit être ≥ 1", field="n")
        canon: List[Tuple[int, ...]] = []
        for idx, edge in enumerate(self.hyperedges):
            e = tuple(sorted(set(int(v) for v in edge)))
            if len(e) < 2:
                raise ValidationError("hyperarête de taille < 2", field=f"hyperedges[{idx}]")
            if e[0] < 1 or e[-1] > self.n:
                raise ValidationError(f"sommet hors de [1, {self.n}]", field=f"hyperedges[{idx}]")
            for other in canon:
                if set(other) <= set(e) or set(e) <= set(other):
                    raise ValidationError(f"inclusion entre hyperarêtes {other} et {e}",
                                          field=f"hyperedges[{idx}]")
            canon.append(e)
        object.__setattr__(self, "hyperedges", tuple(sorted(canon)))

    def to_json(self) -> dict:
        return {"n": self.n, "hyperedges": [list(e) for e in self.hyperedges]}


@dataclass(frozen=True)
class SignedGraph:
    """
    Graphe signé au sens de Zaslavsky.
    - positive : arêtes x_i = x_j
    - negative : arêtes x_i = -x_j
    - zero_vertices : sommets portant l'hyperplan x_i = 0
    """
    n: int
    positive: Tuple[Edge, ...] = ()
    negative: Tuple[Edge, ...] = ()
    zero_vertices: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValidationError("n doit être ≥ 1", field="n")
        object.__setattr__(self, "positive", _normalize_edges(self.n, self.positive, "positive"))
        object.__setattr__(self, "negative", _normalize_edges(self.n, self.negative, "negative"))
        zeros = tuple(sorted(set(int(v) for v in self.zero_vertices)))
        for idx, v in enumerate(zeros):
            if not 1 <= v <= self.n:
                raise ValidationError(f"sommet hors de [1, {self.n}]", field=f"zero_vertices[{idx}]")
        object.__setattr__(self, "zero_vertices", zeros)

    @property
    def edge_count(self) -> int:
        return len(self.positive) + len(self.negative) + len(self.zero_vertices)

    def to_json(self) -> dict:
        return {"n": self.n,
                "positive": [list(e) for e in self.positive],
                "negative": [list(e) for e in self.negative],
                "zero_vertices": list(self.zero_vertices)}


GraphLike = Union[Graph, Hypergraph, SignedGraph]


# ---------- Arrangements associés ----------
def graph_to_arrangement(g: Graph) -> Arrangement:
    if not g.edges:
        raise EmptyEdgeSet("le graphe n'a aucune arête")
    amb = Ambient(Family.A, g.n)
    return Arrangement(amb, tuple(SubspaceA.pair(g.n, i, j) for i, j in g.edges))


def hypergraph_to_arrangement(h: Hypergraph) -> Arrangement:
    if not h.hyperedges:
        raise EmptyEdgeSet("l'hypergraphe n'a aucune hyperarête")
    amb = Ambient(Family.A, h.n)
    return Arrangement(amb, tuple(SubspaceA(h.n, (e,)) for e in h.hyperedges))


def signed_graph_to_arrangement(s: SignedGraph) -> Arrangement:
    if not s.edge_count:
        raise EmptyEdgeSet("le graphe signé n'a ni arête ni sommet nul")
    subs = [SubspaceB.pair(s.n, i, j, 1) for i, j in s.positive]
    subs += [SubspaceB.pair(s.n, i, j, -1) for i, j in s.negative]
    subs += [SubspaceB.coordinate(s.n, i) for i in s.zero_vertices]
    return Arrangement(Ambient(Family.B, s.n), tuple(subs))


def to_arrangement(obj: Union[GraphLike, Arrangement]) -> Arrangement:
    """Conversion à la demande d'un document graphe vers son arrangement."""
    if isinstance(obj, Arrangement):
        return obj
    if isinstance(obj, Graph):
        return graph_to_arrangement(obj)
    if isinstance(obj, Hypergraph):
        return hypergraph_to_arrangement(obj)
    return signed_graph_to_arrangement(obj)


# ---------- Oracles ----------
def _constraints(g: Union[Graph, Hypergraph]) -> List[Tuple[int, ...]]:
    return list(g.edges) if isinstance(g, Graph) else list(g.hyperedges)


def proper_coloring_count(g: Union[Graph, Hypergraph], m: int) -> int:
    """Applications [n] → [m] sans arête (hyperarête) monochromatique."""
    constraints = [tuple(v - 1 for v in e) for e in _constraints(g)]
    count = 0
    for colors in product(range(m), repeat=g.n):
        if all(len({colors[v] for v in e}) > 1 for e in constraints):
            count += 1
    return count


def chromatic_poly_brute(g: Union[Graph, Hypergraph]) -> IntPolynomial:
    """P_G par interpolation des comptes en m = 0..n."""
    points = [(m, proper_coloring_count(g, m)) for m in range(g.n + 1)]
    return poly_interpolate(points)


def signed_coloring_count(s: SignedGraph, m: int) -> int:
    """Applications [n] → {-m..m} respectant les arêtes signées et les sommets nuls."""
    count = 0
    for c in product(range(-m, m + 1), repeat=s.n):
        if any(c[i - 1] == c[j - 1] for i, j in s.positive):
            continue
        if any(c[i - 1] == -c[j - 1] for i, j in s.negative):
            continue
        if any(c[i - 1] == 0 for i in s.zero_vertices):
            continue
        count += 1
    return count


def acyclic_orientations(g: Graph) -> int:
    """AO(G) : parcours des 2^|E| orientations, test d'acyclicité networkx."""
    count = 0
    for flips in product((False, True), repeat=len(g.edges)):
        d = nx.DiGraph()
        d.add_nodes_from(range(1, g.n + 1))
        d.add_edges_from((j, i) if flip else (i, j) for (i, j), flip in zip(g.edges, flips))
        if nx.is_directed_acyclic_graph(d):
            count += 1
    return count


def region_signatures(a: Arrangement) -> FrozenSet[Tuple[int, ...]]:
    if not a.is_hyperplane_arrangement():
        raise NotHyperplanes(f"{a} contient des sous-espaces de codimension ≥ 2")
    return frozenset(tuple(face_sign(ch.facet, h) for h in a.subspaces)
                     for ch in chambers_of(a.ambient))


def region_count(a: Arrangement) -> int:
    """R(A) : vecteurs de signes distincts des chambres de H restreints à A."""
    return len(region_signatures(a))
