"""
Complexes de Coxeter Δ_{S_n}, Δ_{B_n} et sous-complexes de lien Δ_{A,H}.
- FaceA : partition ordonnée de [n] (au moins deux blocs).
- FaceB : ensemble nul + blocs signés ordonnés (signes réels, non normalisés).
- FVector, AbstractComplex : données énumératives et complexes explicites.
Calcule f-vecteurs, h-polynômes, caractéristique d'Euler réduite, cônes et
données de Hilbert de l'anneau de Stanley-Reisner.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from math import comb
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from .arrangement import (
    Ambient, Arrangement, Family, Subspace, SubspaceA, SubspaceB,
)
from .errors import AmbientMismatch, EmptyArrangement
from .polyseries import IntPolynomial, RationalSeries

log = logging.getLogger(__name__)

Vertex = FrozenSet


# ---------- Faces ----------
@dataclass(frozen=True)
class FaceA:
    """
    Cellule de Δ_{S_n} : x constant sur chaque bloc, croissant d'un bloc à l'autre.
    - blocks : (B_1, ..., B_k), k ≥ 2 ; dimension k - 2
    """
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.blocks) - 2

    @property
    def family(self) -> Family:
        return Family.A

    def vertices(self) -> FrozenSet[Vertex]:
        """Sommets : les préfixes B_1 ∪ ... ∪ B_i, 1 ≤ i ≤ k-1."""
        out, acc = [], set()
        for blk in self.blocks[:-1]:
            acc |= set(blk)
            out.append(frozenset(acc))
        return frozenset(out)

    def point(self) -> Dict[int, int]:
        """Point représentatif de l'intérieur de la cellule."""
        return {j: t + 1 for t, blk in enumerate(self.blocks) for j in blk}

    def key(self) -> tuple:
        return self.blocks

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.blocks]}


@dataclass(frozen=True)
class FaceB:
    """
    Cellule de Δ_{B_n}.
    - zero : coordonnées nulles
    - blocks : ((B_1, s_1), ..., (B_k, s_k)), k ≥ 1 ; |x| constant sur chaque
      bloc avec les signes s_i, 0 < |B_1| < ... < |B_k| ; dimension k - 1
    """
    n: int
    zero: Tuple[int, ...]
    blocks: Tuple[Tuple[Tuple[int, ...], Tuple[int, ...]], ...]

    @property
    def dimension(self) -> int:
        return len(self.blocks) - 1

    @property
    def family(self) -> Family:
        return Family.B

    def vertices(self) -> FrozenSet[Vertex]:
        """Sommets : les coordonnées signées de B_i ∪ ... ∪ B_k, 1 ≤ i ≤ k."""
        out = []
        for i in range(len(self.blocks)):
            out.append(frozenset((j, s) for members, signs in self.blocks[i:]
                                 for j, s in zip(members, signs)))
        return frozenset(out)

    def point(self) -> Dict[int, int]:
        pt = {j: 0 for j in self.zero}
        for t, (members, signs) in enumerate(self.blocks):
            for j, s in zip(members, signs):
                pt[j] = s * (t + 1)
        return pt

    def key(self) -> tuple:
        return (self.zero, self.blocks)

    def to_json(self) -> dict:
        return {
            "zero": list(self.zero),
            "blocks": [{"members": list(m), "signs": ["+" if s > 0 else "-" for s in sg]}
                       for m, sg in self.blocks],
        }


Face = Union[FaceA, FaceB]


def vertex_key(v: Vertex) -> tuple:
    return (len(v), tuple(sorted(v)))


# ---------- Énumération ----------
def _subsets_lex(items: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
    for i, x in enumerate(items):
        yield (x,)
        for rest in _subsets_lex(items[i + 1:]):
            yield (x,) + rest


def _ordered_partitions(items: Tuple[int, ...]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    if not items:
        yield ()
        return
    for first in _subsets_lex(items):
        rest = tuple(x for x in items if x not in first)
        for tail in _ordered_partitions(rest):
            yield (first,) + tail


def enumerate_faces_a(n: int) -> Iterator[FaceA]:
    """Partitions ordonnées de [n] à au moins deux blocs, ordre lexicographique."""
    for blocks in _ordered_partitions(tuple(range(1, n + 1))):
        if len(blocks) >= 2:
            yield FaceA(n, blocks)


def enumerate_faces_b(n: int) -> Iterator[FaceB]:
    """Toutes les cellules (Z, blocs signés ordonnés) de Δ_{B_n}."""
    coords = tuple(range(1, n + 1))
    zero_sets = [()] + list(_subsets_lex(coords))
    for zero in zero_sets:
        if len(zero) == n:
            continue
        rest = tuple(j for j in coords if j not in zero)
        for blocks in _ordered_partitions(rest):
            sign_choices = [product((1, -1), repeat=len(b)) for b in blocks]
            for signs in product(*(list(c) for c in sign_choices)):
                yield FaceB(n, zero, tuple(zip(blocks, signs)))


def enumerate_faces(ambient: Ambient) -> Iterator[Face]:
    if ambient.family is Family.A:
        return enumerate_faces_a(ambient.n)
    return enumerate_faces_b(ambient.n)


@lru_cache(maxsize=32)
def _cached_faces(family: Family, n: int) -> Tuple[Face, ...]:
    faces = tuple(enumerate_faces(Ambient(family, n)))
    log.debug("Énumération de Δ_%s%d : %d faces", family.value, n, len(faces))
    return faces


def coxeter_faces(ambient: Ambient) -> Tuple[Face, ...]:
    """Faces non vides de Δ_H (mises en cache par type et rang)."""
    return _cached_faces(ambient.family, ambient.n)


def facets_of(ambient: Ambient) -> List[Face]:
    """Facettes de Δ_H (les chambres)."""
    top = ambient.essential_dim - 1
    return [f for f in coxeter_faces(ambient) if f.dimension == top]


# ---------- Supports et appartenance au lien ----------
def face_support_a(face: FaceA) -> SubspaceA:
    return SubspaceA(face.n, face.blocks)


def face_support_b(face: FaceB) -> SubspaceB:
    return SubspaceB(face.n, face.zero, face.blocks)


def face_support(face: Face) -> Subspace:
    return face_support_a(face) if isinstance(face, FaceA) else face_support_b(face)


def _link_predicate(a: Arrangement) -> Callable[[Face], bool]:
    fam = a.ambient.family
    if fam is Family.A:
        constraints = [s.nontrivial_blocks() for s in a.subspaces]

        def test_a(face: FaceA) -> bool:
            pos = {j: t for t, blk in enumerate(face.blocks) for j in blk}
            return any(all(len({pos[j] for j in blk}) == 1 for blk in blocks)
                       for blocks in constraints)
        return test_a

    constraints_b = [(set(s.zero), s.nontrivial_blocks()) for s in a.subspaces]

    def test_b(face: FaceB) -> bool:
        zero = set(face.zero)
        where = {}
        for t, (members, signs) in enumerate(face.blocks):
            for j, s in zip(members, signs):
                where[j] = (t, s)
        for s_zero, blocks in constraints_b:
            if not s_zero <= zero:
                continue
            ok = True
            for members, taus in blocks:
                if all(j in zero for j in members):
                    continue
                if any(j in zero for j in members):
                    ok = False
                    break
                if len({where[j][0] for j in members}) != 1:
                    ok = False
                    break
                rel = [where[j][1] * tau for j, tau in zip(members, taus)]
                if len(set(rel)) != 1:
                    ok = False
                    break
            if ok:
                return True
        return False
    return test_b


def _check_ambient(face: Face, ambient: Ambient) -> None:
    if face.family is not ambient.family or face.n != ambient.n:
        raise AmbientMismatch(f"face de type {face.family.value}{face.n} hors de {ambient}")


def face_in_link(face: Face, a: Arrangement) -> bool:
    """Vrai si la cellule est contenue dans ∪A."""
    _check_ambient(face, a.ambient)
    return _link_predicate(a)(face)


def link_faces(a: Arrangement) -> List[Face]:
    """Faces non vides de Δ_{A,H}."""
    if not a.subspaces:
        return []
    test = _link_predicate(a)
    return [f for f in coxeter_faces(a.ambient) if test(f)]


# ---------- f-vecteurs ----------
@dataclass(frozen=True)
class FVector:
    """
    (f_{-1}, f_0, ..., f_{d-1}) ; le complexe vide (sans face) est ().
    d = longueur - 1.
    """
    counts: Tuple[int, ...] = ()

    @property
    def d(self) -> int:
        return len(self.counts) - 1

    def is_empty(self) -> bool:
        return not self.counts

    def to_json(self) -> List[int]:
        return list(self.counts)

    @classmethod
    def from_json(cls, data: Sequence[int]) -> "FVector":
        return cls(tuple(int(c) for c in data))


def _bucket(faces: Iterable[Face], top: int) -> FVector:
    counts = [0] * (top + 1)
    for f in faces:
        counts[f.dimension] += 1
    return FVector((1,) + tuple(counts))


def link_f_vector(a: Arrangement) -> FVector:
    """f-vecteur de Δ_{A,H} ; sa dimension vaut d(A) - 1."""
    if not a.subspaces:
        return FVector(())
    faces = link_faces(a)
    top = a.max_dim - 1
    found = max((f.dimension for f in faces), default=-1)
    assert found == top, f"dimension du lien {found} ≠ d(A)-1 = {top}"
    return _bucket(faces, top)


def coxeter_f_vector(ambient: Ambient) -> FVector:
    return _bucket(coxeter_faces(ambient), ambient.essential_dim - 1)


def h_polynomial(f: FVector) -> IntPolynomial:
    """h(Δ;x) = Σ_{i=0}^{d} f_{i-1} (x-1)^{d-i}."""
    d = f.d
    x_minus_1 = IntPolynomial((-1, 1))
    result = IntPolynomial()
    for i, fi in enumerate(f.counts):
        result = result + (x_minus_1 ** (d - i)) * fi
    return result


def reverse_h(f: FVector) -> IntPolynomial:
    """h̄(Δ;x) = x^d h(Δ;1/x)."""
    if f.is_empty():
        return IntPolynomial()
    return h_polynomial(f).reversed_at(f.d)


def reduced_euler(f: FVector) -> int:
    """χ̃ = -f_{-1} + f_0 - f_1 + ... ; χ̃(∅) = 0."""
    return sum((-1) ** (idx + 1) * c for idx, c in enumerate(f.counts))


def hilbert_function(f: FVector, m: int) -> int:
    """Nombre de monômes de degré m dont le support est une face."""
    if f.is_empty():
        return 0
    if m == 0:
        return 1
    return sum(fi * comb(m - 1, i - 1) for i, fi in enumerate(f.counts) if i >= 1)


def hilbert_series(f: FVector) -> RationalSeries:
    """Hilb(k[Δ];x) = h̄(Δ;x) / (1-x)^d."""
    if f.is_empty():
        return RationalSeries(IntPolynomial(), 0)
    return RationalSeries(reverse_h(f), f.d)


# ---------- Complexes abstraits ----------
@dataclass(frozen=True)
class AbstractComplex:
    """
    Complexe simplicial donné par ses facettes.
    - vertex_count : sommets 0..vertex_count-1
    - facets : ensembles d'indices de sommets
    - labels : étiquette géométrique de chaque sommet (optionnelle)
    """
    vertex_count: int
    facets: Tuple[FrozenSet[int], ...]
    labels: Tuple = field(default=(), compare=False, repr=False)

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1

    def faces(self) -> set:
        out = set()
        for facet in self.facets:
            items = sorted(facet)
            for r in range(len(items) + 1):
                out.update(frozenset(c) for c in combinations(items, r))
        return out

    def f_vector(self) -> FVector:
        faces = self.faces()
        if not faces:
            return FVector(())
        counts = [0] * (self.dimension + 2)
        for face in faces:
            counts[len(face)] += 1
        return FVector(tuple(counts))

    def to_json(self) -> dict:
        return {"vertices": self.vertex_count,
                "facets": [sorted(f) for f in self.facets]}


def cone_complex(c: AbstractComplex) -> AbstractComplex:
    """Cône : un nouveau sommet ajouté à chaque facette."""
    apex = c.vertex_count
    facets = tuple(f | {apex} for f in c.facets) or (frozenset({apex}),)
    labels = tuple(c.labels) + (("apex", apex),) if c.labels else ()
    return AbstractComplex(apex + 1, facets, labels)


def double_cone(c: AbstractComplex) -> AbstractComplex:
    return cone_complex(cone_complex(c))


def _abstract_from_faces(faces: Sequence[Face]) -> AbstractComplex:
    vsets = [f.vertices() for f in faces]
    labels = sorted({v for vs in vsets for v in vs}, key=vertex_key)
    index = {v: i for i, v in enumerate(labels)}
    covered = set()
    for vs in vsets:
        for v in vs:
            covered.add(vs - {v})
    facets = sorted((frozenset(index[v] for v in vs) for vs in vsets if vs not in covered),
                    key=lambda f: sorted(f))
    return AbstractComplex(len(labels), tuple(facets), tuple(labels))


def link_abstract(a: Arrangement) -> AbstractComplex:
    """
    Δ_{A,H} explicite : sommets du lien indexés de façon stable, facettes maximales.
    Si d(A) = 0 le lien est le complexe {∅}.
    """
    if a.max_dim < 0:
        raise EmptyArrangement("link_abstract exige un arrangement non vide")
    if a.max_dim == 0:
        return AbstractComplex(0, (frozenset(),))
    return _abstract_from_faces(link_faces(a))


def coxeter_abstract(ambient: Ambient) -> AbstractComplex:
    return _abstract_from_faces(coxeter_faces(ambient))


# ---------- Conversions ----------
def face_from_vertices(ambient: Ambient, vertices: Iterable[Vertex]) -> Optional[Face]:
    """
    Face engendrée par un ensemble de sommets formant une chaîne ; None pour
    la face vide. Lève ValueError si les sommets ne forment pas une face.
    """
    vs = list(vertices)
    if not vs:
        return None
    n = ambient.n
    if ambient.family is Family.A:
        chain = sorted(vs, key=len)
        blocks, prev = [], frozenset()
        for v in chain:
            if not prev < v:
                raise ValueError("les sommets ne forment pas une chaîne")
            blocks.append(tuple(sorted(v - prev)))
            prev = v
        rest = frozenset(range(1, n + 1)) - prev
        if not rest:
            raise ValueError("sommet dégénéré")
        blocks.append(tuple(sorted(rest)))
        return FaceA(n, tuple(blocks))
    chain = sorted(vs, key=len, reverse=True)
    for big, small in zip(chain, chain[1:]):
        if not small < big:
            raise ValueError("les sommets ne forment pas une chaîne")
    coords = {j for j, _ in chain[0]}
    zero = tuple(sorted(set(range(1, n + 1)) - coords))
    blocks = []
    for big, small in zip(chain, chain[1:] + [frozenset()]):
        part = sorted(big - small)
        blocks.append((tuple(j for j, _ in part), tuple(s for _, s in part)))
    return FaceB(n, zero, tuple(blocks))


def lift_face(host: Subspace, face: Face) -> Face:
    """Plonge une face de Δ_{H/host} (coordonnées contractées) dans Δ_H."""
    if isinstance(host, SubspaceA):
        return FaceA(host.n, tuple(
            tuple(sorted(j for t in blk for j in host.blocks[t - 1])) for blk in face.blocks))
    zero = set(host.zero)
    for t in face.zero:
        zero.update(host.blocks[t - 1][0])
    blocks = []
    for members, signs in face.blocks:
        pairs = []
        for t, eps in zip(members, signs):
            h_members, h_signs = host.blocks[t - 1]
            pairs.extend((j, eps * s) for j, s in zip(h_members, h_signs))
        pairs.sort()
        blocks.append((tuple(j for j, _ in pairs), tuple(s for _, s in pairs)))
    return FaceB(host.n, tuple(sorted(zero)), tuple(blocks))


def face_sign(face: Face, hyperplane: Subspace) -> int:
    """Signe (-1, 0, +1) de l'intérieur de la face par rapport à un hyperplan."""
    pt = face.point()
    if isinstance(hyperplane, SubspaceA):
        (i, j), = hyperplane.nontrivial_blocks()
        diff = pt[i] - pt[j]
    elif hyperplane.zero:
        diff = pt[hyperplane.zero[0]]
    else:
        ((i, j), (_, tau)), = hyperplane.nontrivial_blocks()
        diff = pt[i] - tau * pt[j]
    return (diff > 0) - (diff < 0)
