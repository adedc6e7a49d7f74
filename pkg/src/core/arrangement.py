"""
Sous-espaces symboliques des arrangements de Coxeter de type A et B.
- SubspaceA : partition d'ensemble de [n] (x_i = x_j dans chaque bloc).
- SubspaceB : ensemble nul + blocs signés (x_i = ±x_j dans chaque bloc).
- Arrangement : antichaîne de sous-espaces propres d'un même ambiant.
- IntersectionLattice : clôture par intersection, ordre, Möbius.
Calcule polynôme caractéristique, queue, suppression et restriction.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import IndexOutOfRange, NotInLattice, ValidationError
from .polyseries import IntPolynomial
from .union_find import ParityUnionFind, UnionFind

log = logging.getLogger(__name__)


class Family(str, Enum):
    A = "A"
    B = "B"


Block = Tuple[int, ...]
SignedBlock = Tuple[Tuple[int, ...], Tuple[int, ...]]


# ---------- Sous-espaces ----------
@dataclass(frozen=True)
class SubspaceA:
    """
    Élément de L_{S_n} : partition de {1..n}.
    - blocks : blocs triés, ordonnés par minimum, singletons inclus
    - dim = nombre de blocs - 1 (dans l'hyperplan Σx_i = 0)
    """
    n: int
    blocks: Tuple[Block, ...]

    def __post_init__(self):
        seen: Dict[int, int] = {}
        canon = []
        for blk in self.blocks:
            b = tuple(sorted(int(j) for j in blk))
            if not b:
                raise ValidationError("bloc vide")
            for j in b:
                if not 1 <= j <= self.n:
                    raise ValidationError(f"étiquette {j} hors de [1, {self.n}]")
                if j in seen:
                    raise ValidationError(f"étiquette {j} répétée")
                seen[j] = 1
            canon.append(b)
        for j in range(1, self.n + 1):
            if j not in seen:
                canon.append((j,))
        canon.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(canon))

    @classmethod
    def full(cls, n: int) -> "SubspaceA":
        return cls(n, ())

    @classmethod
    def pair(cls, n: int, i: int, j: int) -> "SubspaceA":
        """Hyperplan x_i = x_j."""
        return cls(n, ((i, j),))

    @property
    def dim(self) -> int:
        return len(self.blocks) - 1

    @property
    def family(self) -> Family:
        return Family.A

    def nontrivial_blocks(self) -> Tuple[Block, ...]:
        return tuple(b for b in self.blocks if len(b) > 1)

    def key(self) -> tuple:
        return self.blocks

    def to_json(self) -> dict:
        return {"blocks": [list(b) for b in self.nontrivial_blocks()]}

    def __str__(self) -> str:
        return "{" + "|".join("".join(map(str, b)) if self.n < 10 else ",".join(map(str, b))
                              for b in self.blocks) + "}"


@dataclass(frozen=True)
class SubspaceB:
    """
    Élément de L_{B_n}.
    - zero : coordonnées nulles
    - blocks : blocs signés (membres croissants, signes ±1) ; le minimum de
      chaque bloc porte le signe +, singletons inclus
    - dim = nombre de blocs signés
    """
    n: int
    zero: Tuple[int, ...] = ()
    blocks: Tuple[SignedBlock, ...] = ()

    def __post_init__(self):
        zero = tuple(sorted(set(int(j) for j in self.zero)))
        used = set(zero)
        for j in zero:
            if not 1 <= j <= self.n:
                raise ValidationError(f"étiquette {j} hors de [1, {self.n}]")
        canon = []
        for members, signs in self.blocks:
            if len(members) != len(signs) or not members:
                raise ValidationError("bloc signé mal formé")
            pairs = sorted(zip((int(m) for m in members), (int(s) for s in signs)))
            for j, s in pairs:
                if not 1 <= j <= self.n:
                    raise ValidationError(f"étiquette {j} hors de [1, {self.n}]")
                if s not in (1, -1):
                    raise ValidationError(f"signe invalide {s}")
                if j in used:
                    raise ValidationError(f"étiquette {j} répétée")
                used.add(j)
            lead = pairs[0][1]
            canon.append((tuple(j for j, _ in pairs), tuple(s * lead for _, s in pairs)))
        for j in range(1, self.n + 1):
            if j not in used:
                canon.append(((j,), (1,)))
        canon.sort(key=lambda b: b[0][0])
        object.__setattr__(self, "zero", zero)
        object.__setattr__(self, "blocks", tuple(canon))

    @classmethod
    def full(cls, n: int) -> "SubspaceB":
        return cls(n)

    @classmethod
    def coordinate(cls, n: int, i: int) -> "SubspaceB":
        """Hyperplan x_i = 0."""
        return cls(n, (i,))

    @classmethod
    def pair(cls, n: int, i: int, j: int, tau: int) -> "SubspaceB":
        """Hyperplan x_i = tau * x_j."""
        return cls(n, (), (((i, j), (1, tau)),))

    @property
    def dim(self) -> int:
        return len(self.blocks)

    @property
    def family(self) -> Family:
        return Family.B

    def nontrivial_blocks(self) -> Tuple[SignedBlock, ...]:
        return tuple(b for b in self.blocks if len(b[0]) > 1)

    def key(self) -> tuple:
        return (self.zero, self.blocks)

    def to_json(self) -> dict:
        return {
            "zero": list(self.zero),
            "signed_blocks": [
                {"members": list(m), "signs": ["+" if s > 0 else "-" for s in sg]}
                for m, sg in self.nontrivial_blocks()
            ],
        }

    def __str__(self) -> str:
        parts = [f"0:{''.join(map(str, self.zero))}"] if self.zero else []
        for m, sg in self.blocks:
            parts.append("".join(("" if s > 0 else "-") + str(j) for j, s in zip(m, sg)))
        return "{" + "|".join(parts) + "}"


Subspace = Union[SubspaceA, SubspaceB]


@dataclass(frozen=True)
class Ambient:
    """
    Espace ambiant d'un arrangement.
    - family : TypeA (S_n, dans Σx_i = 0) ou TypeB (B_n, dans R^n)
    - host : sous-espace hôte quand l'ambiant provient d'une restriction
    """
    family: Family
    n: int
    host: Optional[Subspace] = field(default=None, compare=False, repr=False)

    @property
    def essential_dim(self) -> int:
        return self.n - 1 if self.family is Family.A else self.n

    def full_space(self) -> Subspace:
        return SubspaceA.full(self.n) if self.family is Family.A else SubspaceB.full(self.n)

    def hyperplanes(self) -> List[Subspace]:
        """Liste canonique des hyperplans de S_n ou B_n."""
        n = self.n
        if self.family is Family.A:
            return [SubspaceA.pair(n, i, j) for i, j in combinations(range(1, n + 1), 2)]
        out: List[Subspace] = []
        for i, j in combinations(range(1, n + 1), 2):
            out.append(SubspaceB.pair(n, i, j, 1))
            out.append(SubspaceB.pair(n, i, j, -1))
        out.extend(SubspaceB.coordinate(n, i) for i in range(1, n + 1))
        return out

    def accepts(self, s: Subspace) -> bool:
        return s.family is self.family and s.n == self.n

    def to_json(self) -> dict:
        return {"family": self.family.value, "n": self.n}

    def __str__(self) -> str:
        return f"{'S' if self.family is Family.A else 'B'}_{self.n}"


# ---------- Intersection et ordre ----------
def _intersect_a(s: SubspaceA, t: SubspaceA) -> SubspaceA:
    uf = UnionFind(range(1, s.n + 1))
    for blk in s.blocks + t.blocks:
        for j in blk[1:]:
            uf.union(blk[0], j)
    return SubspaceA(s.n, tuple(tuple(c) for c in uf.classes()))


def _intersect_b(s: SubspaceB, t: SubspaceB) -> SubspaceB:
    uf = ParityUnionFind(range(1, s.n + 1))
    for members, signs in s.blocks + t.blocks:
        for j, sg in zip(members[1:], signs[1:]):
            # x_j = sg * v et x_first = v  =>  x_j = sg * x_first
            uf.union(j, members[0], sg)
    zero_seed = set(s.zero) | set(t.zero)
    zero: List[int] = []
    blocks: List[SignedBlock] = []
    # Une classe touchant l'ensemble nul, ou en conflit de parité, est nulle en entier
    for cls in uf.classes():
        elems = [j for j, _ in cls]
        if uf.is_conflicted(elems[0]) or any(j in zero_seed for j in elems):
            zero.extend(elems)
        else:
            blocks.append((tuple(elems), tuple(sg for _, sg in cls)))
    return SubspaceB(s.n, tuple(zero), tuple(blocks))


def _check_same(s: Subspace, t: Subspace) -> None:
    if s.family is not t.family or s.n != t.n:
        raise ValidationError(f"ambiants différents: {s} / {t}")


def intersect(s: Subspace, t: Subspace) -> Subspace:
    """s ∩ t sous forme canonique."""
    _check_same(s, t)
    if isinstance(s, SubspaceA):
        return _intersect_a(s, t)
    return _intersect_b(s, t)


def subspace_leq(s: Subspace, t: Subspace) -> bool:
    """s ≤ t dans L (ordre par inclusion renversée) : s ⊇ t."""
    return intersect(s, t) == t


# ---------- Arrangements ----------
@dataclass(frozen=True)
class Arrangement:
    """
    Antichaîne finie de sous-espaces propres d'un ambiant de type A ou B.
    Les violations d'antichaîne sont rejetées (ValidationError).
    """
    ambient: Ambient
    subspaces: Tuple[Subspace, ...] = ()

    def __post_init__(self):
        subs = tuple(self.subspaces)
        object.__setattr__(self, "subspaces", subs)
        full = self.ambient.full_space()
        for i, s in enumerate(subs):
            if not self.ambient.accepts(s):
                raise ValidationError(f"sous-espace {s} incompatible avec {self.ambient}",
                                      field=f"subspaces[{i}]")
            if s == full:
                raise ValidationError("le sous-espace est l'espace ambiant entier",
                                      field=f"subspaces[{i}]")
        for i, j in combinations(range(len(subs)), 2):
            if subspace_leq(subs[i], subs[j]) or subspace_leq(subs[j], subs[i]):
                raise ValidationError(
                    f"{subs[i]} et {subs[j]} sont comparables (antichaîne requise)",
                    field=f"subspaces[{j}]")

    def __len__(self) -> int:
        return len(self.subspaces)

    def __iter__(self):
        return iter(self.subspaces)

    @property
    def max_dim(self) -> int:
        """d(A) = max des dimensions ; -1 pour l'arrangement vide."""
        return max((s.dim for s in self.subspaces), default=-1)

    def is_hyperplane_arrangement(self) -> bool:
        top = self.ambient.essential_dim - 1
        return all(s.dim == top for s in self.subspaces)

    def canonical_order(self) -> List[int]:
        """Indices des membres triés par sérialisation canonique."""
        return sorted(range(len(self.subspaces)), key=lambda i: self.subspaces[i].key())

    def to_json(self) -> dict:
        return {"ambient": self.ambient.to_json(),
                "subspaces": [s.to_json() for s in self.subspaces]}

    def __str__(self) -> str:
        return f"{self.ambient}[{', '.join(str(s) for s in self.subspaces)}]"


def braid_arrangement(n: int) -> Arrangement:
    amb = Ambient(Family.A, n)
    return Arrangement(amb, tuple(amb.hyperplanes()))


def type_b_arrangement(n: int) -> Arrangement:
    amb = Ambient(Family.B, n)
    return Arrangement(amb, tuple(amb.hyperplanes()))


# ---------- Treillis d'intersection ----------
@dataclass(frozen=True)
class IntersectionLattice:
    """
    Treillis L_A.
    - elements : sous-espaces, elements[0] = 0̂ (l'ambiant entier), triés par
      dimension décroissante
    - above : above[i] = indices j avec elements[i] ≤ elements[j]
    - mobius : mobius[i] = μ(0̂, elements[i])
    """
    ambient: Ambient
    elements: Tuple[Subspace, ...]
    above: Tuple[frozenset, ...]
    mobius: Tuple[int, ...]

    def index(self, s: Subspace) -> int:
        try:
            return self.elements.index(s)
        except ValueError:
            raise NotInLattice(f"{s} n'appartient pas au treillis") from None

    def __contains__(self, s: Subspace) -> bool:
        return s in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return j in self.above[i]

    def mobius_from_bottom(self, s: Subspace) -> int:
        return self.mobius[self.index(s)]

    def mobius_interval(self, i: int, j: int) -> int:
        """μ(elements[i], elements[j]) par la récurrence usuelle."""
        if not self.leq(i, j):
            return 0
        values: Dict[int, int] = {}
        for k in sorted(self.above[i], key=lambda k: -self.elements[k].dim):
            if not self.leq(k, j):
                continue
            if k == i:
                values[k] = 1
            else:
                values[k] = -sum(v for z, v in values.items() if self.leq(z, k))
        return values[j]

    def covering_elements(self, i: int) -> List[int]:
        """Éléments couvrant elements[i]."""
        ups = [j for j in self.above[i] if j != i]
        return [j for j in ups
                if not any(k != j and self.leq(k, j) for k in ups)]


def build_lattice(a: Arrangement) -> IntersectionLattice:
    """Clôture de {0̂} ∪ A par intersection, puis Möbius depuis 0̂."""
    full = a.ambient.full_space()
    seen = {full: None}
    frontier = [full]
    while frontier:
        nxt = []
        for y in frontier:
            for atom in a.subspaces:
                z = intersect(y, atom)
                if z not in seen:
                    seen[z] = None
                    nxt.append(z)
        frontier = nxt
    elements = sorted(seen, key=lambda s: (-s.dim, s.key()))
    size = len(elements)
    above = []
    for i in range(size):
        above.append(frozenset(j for j in range(size)
                               if j == i or (elements[j].dim < elements[i].dim
                                             and subspace_leq(elements[i], elements[j]))))
    mobius: List[int] = []
    for j in range(size):
        if j == 0:
            mobius.append(1)
            continue
        mobius.append(-sum(mobius[z] for z in range(j) if j in above[z]))
    log.debug("Treillis de %s : %d éléments", a, size)
    return IntersectionLattice(a.ambient, tuple(elements), tuple(above), tuple(mobius))


def char_poly(a: Arrangement) -> IntPolynomial:
    """χ(A;x) = Σ_Y μ(0̂,Y) x^{dim Y} ; χ(∅;x) = x^{dim ambiant}."""
    lattice = build_lattice(a)
    result = IntPolynomial()
    for y, mu in zip(lattice.elements, lattice.mobius):
        result = result + IntPolynomial.monomial(y.dim, mu)
    return result


def tail_poly(a: Arrangement) -> IntPolynomial:
    """T(A;x) = x^{dim ambiant} - χ(A;x)."""
    return IntPolynomial.monomial(a.ambient.essential_dim) - char_poly(a)


def deletion(a: Arrangement, i: int) -> Arrangement:
    if not 0 <= i < len(a.subspaces):
        raise IndexOutOfRange(f"indice {i} hors de [0, {len(a.subspaces)})")
    return Arrangement(a.ambient, a.subspaces[:i] + a.subspaces[i + 1:])


# ---------- Restriction et changement de coordonnées ----------
def contracted_ambient(ambient: Ambient, host: Subspace) -> Ambient:
    """Ambiant de type A/B obtenu en contractant chaque bloc de l'hôte."""
    return Ambient(ambient.family, len(host.blocks), host=host)


def recoordinate(host: Subspace, sub: Subspace) -> Subspace:
    """
    Réécrit sub ⊆ host dans les coordonnées de host :
    un bloc de host devient une coordonnée (étiquetée par l'ordre des minima).
    """
    if isinstance(host, SubspaceA):
        label = {j: t + 1 for t, blk in enumerate(host.blocks) for j in blk}
        return SubspaceA(len(host.blocks),
                         tuple(tuple(sorted({label[j] for j in blk})) for blk in sub.blocks))
    label = {}
    for t, (members, signs) in enumerate(host.blocks):
        for j, s in zip(members, signs):
            label[j] = (t + 1, s)
    zero = sorted({label[j][0] for j in sub.zero if j in label})
    blocks = []
    for members, signs in sub.blocks:
        coords: Dict[int, int] = {}
        for j, rho in zip(members, signs):
            t, sigma = label[j]
            coords.setdefault(t, rho * sigma)
        blocks.append((tuple(coords), tuple(coords.values())))
    return SubspaceB(len(host.blocks), tuple(zero), tuple(blocks))


def lift_subspace(host: Subspace, sub: Subspace) -> Subspace:
    """Inverse de recoordinate : ramène un sous-espace de host dans l'ambiant d'origine."""
    if isinstance(host, SubspaceA):
        return SubspaceA(host.n, tuple(
            tuple(j for t in blk for j in host.blocks[t - 1]) for blk in sub.blocks))
    zero = list(host.zero)
    for t in sub.zero:
        zero.extend(host.blocks[t - 1][0])
    blocks = []
    for members, signs in sub.blocks:
        m: List[int] = []
        sg: List[int] = []
        for t, eps in zip(members, signs):
            h_members, h_signs = host.blocks[t - 1]
            m.extend(h_members)
            sg.extend(eps * s for s in h_signs)
        blocks.append((tuple(m), tuple(sg)))
    return SubspaceB(host.n, tuple(zero), tuple(blocks))


def restriction(a: Arrangement, s: Subspace) -> Arrangement:
    """
    A/s = max { s ∩ B : B ∈ A \\ {s} }, exprimé dans les coordonnées de s.
    s doit appartenir au treillis L_A (NotInLattice sinon).
    """
    if not a.ambient.accepts(s):
        raise NotInLattice(f"{s} n'est pas dans l'ambiant {a.ambient}")
    if s not in a.subspaces and s not in build_lattice(a):
        raise NotInLattice(f"{s} n'appartient pas au treillis de {a}")
    candidates = []
    for b in a.subspaces:
        if b == s:
            continue
        y = intersect(s, b)
        if y != s and y not in candidates:
            candidates.append(y)
    maximal = [y for y in candidates
               if not any(z != y and subspace_leq(z, y) for z in candidates)]
    maximal.sort(key=lambda y: y.key())
    amb = contracted_ambient(a.ambient, s)
    return Arrangement(amb, tuple(recoordinate(s, y) for y in maximal))
