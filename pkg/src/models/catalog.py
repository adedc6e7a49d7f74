"""
Catalogue d'entrées pour la vérification des identités.
- exhaustif : tous les graphes étiquetés (n ≤ max_graph_n), tous les graphes
  signés (n ≤ max_signed_n)
- aléatoire : graphes G(n, p), hypergraphes, antichaînes de Π_n et L_{B_n}
- fixtures : f-vecteurs imposés (contrôle négatif)
Les catalogues peuvent aussi être lus depuis un fichier YAML ou JSON.
"""

from __future__ import annotations

import logging
import os
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional

import networkx as nx
import yaml

from ..core.arrangement import Ambient, Arrangement, Family, Subspace, SubspaceA, SubspaceB, subspace_leq
from ..core.complex import FVector
from ..core.errors import ParseError, ValidationError
from ..parser.document_parser import DocumentParser
from .graphs import Graph, Hypergraph, SignedGraph, to_arrangement

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class FVectorFixture:
    """Arrangement dont le f-vecteur du lien est imposé au lieu d'être énuméré."""
    arrangement: Arrangement
    f_vector: FVector
    label: str = ""


@dataclass
class Catalog:
    graphs: List[Graph] = field(default_factory=list)
    hypergraphs: List[Hypergraph] = field(default_factory=list)
    signed_graphs: List[SignedGraph] = field(default_factory=list)
    antichains: List[Arrangement] = field(default_factory=list)
    hyperplane_antichains: List[Arrangement] = field(default_factory=list)
    eulerian_a: List[int] = field(default_factory=list)
    eulerian_b: List[int] = field(default_factory=list)
    fixtures: List[FVectorFixture] = field(default_factory=list)

    def is_empty(self) -> bool:
        return not any((self.graphs, self.hypergraphs, self.signed_graphs, self.antichains,
                        self.hyperplane_antichains, self.eulerian_a, self.eulerian_b,
                        self.fixtures))

    def size(self) -> int:
        return sum(len(x) for x in (self.graphs, self.hypergraphs, self.signed_graphs,
                                    self.antichains, self.hyperplane_antichains,
                                    self.eulerian_a, self.eulerian_b, self.fixtures))


# ---------- Énumérations exhaustives ----------
def all_graphs(max_n: int, min_n: int = 2) -> List[Graph]:
    """Tous les graphes étiquetés avec au moins une arête, n = min_n..max_n."""
    out = []
    for n in range(min_n, max_n + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        for mask in range(1, 1 << len(pairs)):
            out.append(Graph(n, tuple(p for t, p in enumerate(pairs) if mask >> t & 1)))
    return out


def all_signed_graphs(max_n: int) -> List[SignedGraph]:
    """Tous les sous-arrangements non vides de B_n, n = 1..max_n, vus comme graphes signés."""
    out = []
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(1, n + 1), 2))
        atoms = [("+", p) for p in pairs] + [("-", p) for p in pairs] + [("0", v) for v in range(1, n + 1)]
        for mask in range(1, 1 << len(atoms)):
            chosen = [atoms[t] for t in range(len(atoms)) if mask >> t & 1]
            out.append(SignedGraph(
                n,
                tuple(p for kind, p in chosen if kind == "+"),
                tuple(p for kind, p in chosen if kind == "-"),
                tuple(v for kind, v in chosen if kind == "0"),
            ))
    return out


# ---------- Générateurs aléatoires ----------
def random_graphs(count: int, n: int, p: float, seed: int) -> List[Graph]:
    out = []
    for t in range(count):
        g = nx.gnp_random_graph(n, p, seed=seed + t)
        edges = tuple((i + 1, j + 1) for i, j in g.edges())
        if edges:
            out.append(Graph(n, edges))
    return out


def random_hypergraph(rng: random.Random, n: int, size: int) -> Optional[Hypergraph]:
    edges: List[frozenset] = []
    for _ in range(size * 4):
        if len(edges) == size:
            break
        k = rng.randint(2, n)
        e = frozenset(rng.sample(range(1, n + 1), k))
        if any(e <= f or f <= e for f in edges):
            continue
        edges.append(e)
    if not edges:
        return None
    return Hypergraph(n, tuple(tuple(sorted(e)) for e in edges))


def random_subspace(ambient: Ambient, rng: random.Random) -> Subspace:
    """Sous-espace propre aléatoire de dimension essentielle ≥ 1."""
    n = ambient.n
    if n < (3 if ambient.family is Family.A else 2):
        raise ValueError(f"{ambient} n'a aucun sous-espace propre de dimension ≥ 1 non hyperplan")
    while True:
        if ambient.family is Family.A:
            k = rng.randint(2, max(2, n - 1))
            labels: Dict[int, List[int]] = {}
            for j in range(1, n + 1):
                labels.setdefault(rng.randrange(k), []).append(j)
            s: Subspace = SubspaceA(n, tuple(tuple(b) for b in labels.values()))
        else:
            k = rng.randint(1, n)
            zero = []
            groups: Dict[int, List[tuple]] = {}
            for j in range(1, n + 1):
                if rng.random() < 0.25:
                    zero.append(j)
                else:
                    groups.setdefault(rng.randrange(k), []).append((j, rng.choice((1, -1))))
            blocks = tuple((tuple(j for j, _ in g), tuple(sg for _, sg in g)) for g in groups.values())
            s = SubspaceB(n, tuple(zero), blocks)
        if s != ambient.full_space() and s.dim >= 1:
            return s


def random_antichain(ambient: Ambient, rng: random.Random, size: int) -> Arrangement:
    kept: List[Subspace] = []
    for _ in range(size * 10):
        if len(kept) == size:
            break
        s = random_subspace(ambient, rng)
        if any(s == t or subspace_leq(s, t) or subspace_leq(t, s) for t in kept):
            continue
        kept.append(s)
    return Arrangement(ambient, tuple(kept))


def random_hyperplane_antichain(ambient: Ambient, rng: random.Random) -> Arrangement:
    hyps = ambient.hyperplanes()
    k = rng.randint(1, len(hyps))
    return Arrangement(ambient, tuple(rng.sample(hyps, k)))


# ---------- Catalogue par défaut ----------
def default_catalog(max_graph_n: int = 5, max_signed_n: int = 3, hypergraphs: int = 20,
                    random_antichains: int = 50, seed: int = 2006,
                    budget_a: int = 8, budget_b: int = 5) -> Catalog:
    """`random_antichains` antichaînes aléatoires par famille (Π_n puis L_{B_n})."""
    rng = random.Random(seed)
    cat = Catalog()
    cat.graphs = all_graphs(max_graph_n)
    cat.graphs += random_graphs(max(1, hypergraphs // 4), min(5, budget_a), 0.5, seed)
    cat.signed_graphs = all_signed_graphs(max_signed_n)
    for _ in range(hypergraphs):
        h = random_hypergraph(rng, rng.randint(3, min(5, budget_a)), rng.randint(1, 3))
        if h is not None:
            cat.hypergraphs.append(h)
    ranges = ((Family.A, 3, min(5, budget_a), 4), (Family.B, 2, min(3, budget_b), 3))
    for family, low, high, hyp_cap in ranges:
        if high < low:
            log.warning("Budget trop faible pour des antichaînes aléatoires de type %s", family.value)
            continue
        for _ in range(random_antichains):
            amb = Ambient(family, rng.randint(low, high))
            a = random_antichain(amb, rng, rng.randint(1, 4))
            if a.subspaces:
                cat.antichains.append(a)
            hyp_amb = Ambient(family, min(amb.n, hyp_cap))
            cat.hyperplane_antichains.append(random_hyperplane_antichain(hyp_amb, rng))
    cat.eulerian_a = list(range(2, min(6, budget_a) + 1))
    cat.eulerian_b = list(range(1, min(4, budget_b) + 1))
    log.info("Catalogue par défaut : %d entrées (graine %d)", cat.size(), seed)
    return cat


# ---------- Chargement ----------
def catalog_from_mapping(data: Dict[str, Any]) -> Catalog:
    """
    Construit un catalogue à partir d'un document déjà chargé.
    - graphs / hypergraphs / signed_graphs / arrangements : listes de documents
    - eulerian : {A: [...], B: [...]}
    - fixtures : [{document: ..., f_vector: [...], label: ...}]
    """
    if not isinstance(data, dict):
        raise ValidationError("un catalogue est un objet", field="$")
    parser = DocumentParser()
    cat = Catalog()

    def build(key: str, idx: int, doc: Any):
        return parser.build(doc, path=f"{key}[{idx}]")

    for idx, doc in enumerate(data.get("graphs", []) or []):
        cat.graphs.append(build("graphs", idx, doc))
    for idx, doc in enumerate(data.get("hypergraphs", []) or []):
        cat.hypergraphs.append(build("hypergraphs", idx, doc))
    for idx, doc in enumerate(data.get("signed_graphs", []) or []):
        cat.signed_graphs.append(build("signed_graphs", idx, doc))
    for idx, doc in enumerate(data.get("arrangements", []) or []):
        arr = build("arrangements", idx, doc)
        if arr.is_hyperplane_arrangement():
            cat.hyperplane_antichains.append(arr)
        cat.antichains.append(arr)
    eulerian = data.get("eulerian", {}) or {}
    cat.eulerian_a = [int(n) for n in eulerian.get("A", [])]
    cat.eulerian_b = [int(n) for n in eulerian.get("B", [])]
    for idx, item in enumerate(data.get("fixtures", []) or []):
        if not isinstance(item, dict) or "document" not in item or "f_vector" not in item:
            raise ValidationError("fixture incomplète (document, f_vector)", field=f"fixtures[{idx}]")
        arr = to_arrangement(parser.build(item["document"], path=f"fixtures[{idx}].document"))
        cat.fixtures.append(FVectorFixture(arr, FVector.from_json(item["f_vector"]),
                                           str(item.get("label", ""))))
    return cat


def load_catalog(path: str) -> Catalog:
    """Lit un catalogue YAML (ou JSON, sous-ensemble de YAML)."""
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    try:
        data = yaml.safe_load(text) or {}
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        raise ParseError(f"catalogue illisible: {e}",
                         line=mark.line + 1 if mark else None,
                         column=mark.column + 1 if mark else None) from None
    cat = catalog_from_mapping(data)
    log.info("Catalogue chargé depuis %s : %d entrées", path, cat.size())
    return cat
