"""
Poset des régions et ordres d'épluchage (shellings).
- chambers_of / poset_of_regions : chambres de S_n ou B_n et ordre faible
  depuis une chambre de base.
- linear_extension : toute extension linéaire est un épluchage de Δ_H.
- shell_link : construction inductive d'un épluchage de Δ_{A,H} quand A est
  un arrangement d'hyperplans.
- first_violation / is_shelling_order : vérificateur indépendant.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .arrangement import Ambient, Arrangement, Family, Subspace, contracted_ambient, restriction
from .complex import (
    AbstractComplex, Face, coxeter_abstract, face_sign, facets_of, lift_face, link_abstract,
)
from .errors import (
    EmptyArrangement, IndexOutOfRange, NotAMember, NotAnOrderFilter, NotAPermutation, NotHyperplanes,
    NotPure,
)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chamber:
    """
    Chambre de H : facette de Δ_H et son vecteur de signes (sans zéro) sur la
    liste canonique des hyperplans.
    """
    facet: Face
    signs: Tuple[int, ...]

    def key(self) -> tuple:
        return self.facet.key()


@dataclass(frozen=True)
class ShellingOrder:
    """Suite de facettes (ensembles d'indices de sommets) d'un complexe."""
    facets: Tuple[FrozenSet[int], ...]
    complex: Optional[AbstractComplex] = field(default=None, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.facets)

    def to_json(self) -> List[List[int]]:
        return [sorted(f) for f in self.facets]


@lru_cache(maxsize=32)
def _cached_chambers(family: Family, n: int) -> Tuple[Chamber, ...]:
    ambient = Ambient(family, n)
    hyps = ambient.hyperplanes()
    return tuple(Chamber(f, tuple(face_sign(f, h) for h in hyps)) for f in facets_of(ambient))


def chambers_of(ambient: Ambient) -> List[Chamber]:
    """Chambres : n! permutations (type A), 2^n n! permutations signées (type B)."""
    return list(_cached_chambers(ambient.family, ambient.n))


def separation_set(c1: Chamber, c2: Chamber) -> FrozenSet[int]:
    """Indices des hyperplans séparant les deux chambres."""
    return frozenset(i for i, (a, b) in enumerate(zip(c1.signs, c2.signs)) if a != b)


def antipode_index(chambers: Sequence[Chamber], i: int) -> int:
    target = tuple(-s for s in chambers[i].signs)
    for j, ch in enumerate(chambers):
        if ch.signs == target:
            return j
    raise NotAPermutation("aucune chambre opposée")


# ---------- Poset des régions ----------
@dataclass(frozen=True)
class RegionPoset:
    """
    Poset des régions P_H.
    - base : indice de la chambre de base
    - ell : ell[i] = |séparation(chambre i, base)|
    - covers : couples (i, j) avec i ⊲ j
    - complex : Δ_H, la facette i correspondant à la chambre i
    """
    ambient: Ambient
    chambers: Tuple[Chamber, ...]
    base: int
    ell: Tuple[int, ...]
    covers: Tuple[Tuple[int, int], ...]
    complex: AbstractComplex = field(compare=False, repr=False)

    def __post_init__(self):
        up: Dict[int, List[int]] = {i: [] for i in range(len(self.chambers))}
        for i, j in self.covers:
            up[i].append(j)
        object.__setattr__(self, "_up", up)

    def upper_covers(self, i: int) -> List[int]:
        return self._up[i]

    def leq(self, i: int, j: int) -> bool:
        """Clôture réflexive-transitive des couvertures."""
        if i == j:
            return True
        stack, seen = [i], {i}
        while stack:
            k = stack.pop()
            for nxt in self._up[k]:
                if nxt == j:
                    return True
                if nxt not in seen and self.ell[nxt] < self.ell[j]:
                    seen.add(nxt)
                    stack.append(nxt)
        return False

    def is_order_filter(self, members: Iterable[int]) -> bool:
        members = set(members)
        return all(j in members for i in members for j in self._up[i])

    def rank_sizes(self) -> List[int]:
        sizes = [0] * (max(self.ell, default=-1) + 1)
        for e in self.ell:
            sizes[e] += 1
        return sizes


def poset_of_regions(ambient: Ambient, base: int = 0) -> RegionPoset:
    """P_H pour la chambre de base d'indice `base` dans chambers_of(ambient)."""
    chambers = chambers_of(ambient)
    if not 0 <= base < len(chambers):
        raise IndexOutOfRange(f"chambre de base {base} hors de [0, {len(chambers)})")
    by_signs = {ch.signs: i for i, ch in enumerate(chambers)}
    base_signs = chambers[base].signs
    ell = tuple(sum(1 for a, b in zip(ch.signs, base_signs) if a != b) for ch in chambers)
    covers = []
    for i, ch in enumerate(chambers):
        for k in range(len(ch.signs)):
            flipped = ch.signs[:k] + (-ch.signs[k],) + ch.signs[k + 1:]
            j = by_signs.get(flipped)
            if j is not None and ell[j] == ell[i] + 1:
                covers.append((i, j))
    delta = coxeter_abstract(ambient)
    index = {v: t for t, v in enumerate(delta.labels)}
    facets = tuple(frozenset(index[v] for v in ch.facet.vertices()) for ch in chambers)
    complex_ = AbstractComplex(delta.vertex_count, facets, delta.labels)
    log.debug("Poset des régions de %s : %d chambres, %d couvertures",
              ambient, len(chambers), len(covers))
    return RegionPoset(ambient, tuple(chambers), base, ell, tuple(covers), complex_)


def _extension_indices(p: RegionPoset, preferred_filter: Optional[Iterable[int]] = None) -> List[int]:
    members = set(preferred_filter or ())
    if members and not p.is_order_filter(members):
        raise NotAnOrderFilter("l'ensemble de chambres préféré n'est pas un filtre")
    return sorted(range(len(p.chambers)),
                  key=lambda i: (i in members, p.ell[i], p.chambers[i].key()))


def linear_extension(p: RegionPoset, preferred_filter: Optional[Iterable[int]] = None) -> ShellingOrder:
    """
    Extension linéaire déterministe (ell croissant, puis ordre canonique) ;
    les membres du filtre préféré sont placés en dernier.
    """
    order = _extension_indices(p, preferred_filter)
    return ShellingOrder(tuple(p.complex.facets[i] for i in order), p.complex)


def random_linear_extension(p: RegionPoset, rng: random.Random) -> ShellingOrder:
    indegree = {i: 0 for i in range(len(p.chambers))}
    for _, j in p.covers:
        indegree[j] += 1
    ready = sorted(i for i, d in indegree.items() if d == 0)
    order = []
    while ready:
        i = ready.pop(rng.randrange(len(ready)))
        order.append(i)
        for j in p.upper_covers(i):
            indegree[j] -= 1
            if indegree[j] == 0:
                ready.append(j)
    return ShellingOrder(tuple(p.complex.facets[i] for i in order), p.complex)


# ---------- Vérification ----------
def first_violation(c: AbstractComplex, order: Sequence[FrozenSet[int]]) -> Optional[int]:
    """
    Premier rang j (à partir de 1) où F_j ∩ (∪_{i<j} F_i) n'est pas pur de
    dimension d-2 ; None si l'ordre est un épluchage.
    """
    if not c.is_pure():
        raise NotPure("complexe non pur")
    facets = [frozenset(f) for f in order]
    if len(set(facets)) != len(facets) or set(facets) != set(c.facets):
        raise NotAPermutation("l'ordre n'est pas une permutation des facettes")
    if not facets:
        return None
    ridge = len(facets[0]) - 1
    for j in range(1, len(facets)):
        fj = facets[j]
        meets = [fj & facets[i] for i in range(j)]
        ridges = [m for m in meets if len(m) == ridge]
        for m in meets:
            if not any(m <= r for r in ridges):
                return j + 1
    return None


def is_shelling_order(c: AbstractComplex, order: Sequence[FrozenSet[int]]) -> bool:
    return first_violation(c, order) is None


def shell_coxeter(ambient: Ambient) -> ShellingOrder:
    """Épluchage de Δ_H par extension linéaire du poset des régions."""
    return linear_extension(poset_of_regions(ambient, 0))


# ---------- Cas des arrangements d'hyperplans ----------
def _require_hyperplanes(a: Arrangement) -> None:
    if not a.is_hyperplane_arrangement():
        raise NotHyperplanes(f"{a} contient des sous-espaces de codimension ≥ 2")


def complement_classes(a: Arrangement, member: Subspace) -> List[List[int]]:
    """
    Partition des facettes de Δ_{H/A} (indices dans chambers_of de l'ambiant
    contracté) selon leur composante connexe de A \\ ∪(A/A).
    """
    _require_hyperplanes(a)
    if member not in a.subspaces:
        raise NotAMember(f"{member} n'est pas membre de {a}")
    walls = restriction(a, member)
    chambers = chambers_of(walls.ambient)
    groups: Dict[Tuple[int, ...], List[int]] = {}
    for i, ch in enumerate(chambers):
        signature = tuple(face_sign(ch.facet, h) for h in walls.subspaces)
        groups.setdefault(signature, []).append(i)
    classes = [sorted(g, key=lambda i: chambers[i].key()) for g in groups.values()]
    classes.sort(key=lambda g: chambers[g[0]].key())
    return classes


def shell_link(a: Arrangement) -> ShellingOrder:
    """
    Épluchage de Δ_{A,H} pour un arrangement d'hyperplans non vide :
    on épluche Δ_{H/A_1}, puis pour chaque hyperplan suivant A on ajoute,
    classe par classe, les facettes de Δ_{H/A} ; chaque classe est un filtre
    du poset des régions basé à l'antipode d'une de ses chambres.
    """
    _require_hyperplanes(a)
    if not a.subspaces:
        raise EmptyArrangement("arrangement vide")
    members = [a.subspaces[i] for i in a.canonical_order()]
    link = link_abstract(a)
    if a.max_dim == 0:
        return ShellingOrder(link.facets, link)
    index = {v: t for t, v in enumerate(link.labels)}
    ordered: List[FrozenSet[int]] = []

    def append(host: Subspace, chamber: Chamber) -> None:
        face = lift_face(host, chamber.facet)
        ordered.append(frozenset(index[v] for v in face.vertices()))

    for step, hyperplane in enumerate(members):
        host_ambient = contracted_ambient(a.ambient, hyperplane)
        if step == 0:
            poset = poset_of_regions(host_ambient, 0)
            for i in _extension_indices(poset):
                append(hyperplane, poset.chambers[i])
            continue
        prefix = Arrangement(a.ambient, tuple(members[:step + 1]))
        chambers = chambers_of(host_ambient)
        for cls in complement_classes(prefix, hyperplane):
            poset = poset_of_regions(host_ambient, antipode_index(chambers, cls[0]))
            tail = _extension_indices(poset, cls)[-len(cls):]
            for i in tail:
                append(hyperplane, poset.chambers[i])
        log.debug("Épluchage : %d facettes après %d hyperplans", len(ordered), step + 1)
    return ShellingOrder(tuple(ordered), link)
