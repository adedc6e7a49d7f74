"""
Structures union-find utilisées pour calculer les intersections de sous-espaces.
- UnionFind : classes d'égalité x_i = x_j (type A).
- ParityUnionFind : relations signées x_i = ±x_j avec détection de conflit (type B).
"""

from __future__ import annotations
from typing import Dict, Hashable, Iterable, List, Set, Tuple


class UnionFind:
    def __init__(self, items: Iterable[Hashable]):
        self.parent = {x: x for x in items}
        self.rank = {x: 0 for x in self.parent}

    def find(self, x):
        y = self.parent[x]
        if self.parent[y] != y:
            y = self.parent[x] = self.find(y)
        return y

    def union(self, x, y) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self) -> List[List]:
        """Classes triées (éléments croissants, classes par minimum)."""
        groups: Dict = {}
        for x in sorted(self.parent):
            groups.setdefault(self.find(x), []).append(x)
        return sorted(groups.values(), key=lambda c: c[0])


class ParityUnionFind:
    """
    Union-find avec parité : chaque élément mémorise le signe qui le relie à
    son parent (x = parity * x_parent). Une relation contradictoire
    (x_a = x_b et x_a = -x_b) marque la classe comme conflictuelle, ce qui
    force toute la classe à zéro.
    """

    def __init__(self, items: Iterable[int]):
        self.parent = {x: x for x in items}
        self.parity = {x: 1 for x in self.parent}
        self.conflict: Set[int] = set()

    def find(self, x: int) -> Tuple[int, int]:
        root, sign = x, 1
        path = []
        while self.parent[root] != root:
            path.append(root)
            sign *= self.parity[root]
            root = self.parent[root]
        # Compression : chaque nœud du chemin pointe directement vers la racine
        acc = sign
        for node in path:
            step = self.parity[node]
            self.parent[node] = root
            self.parity[node] = acc
            acc *= step
        return root, sign

    def union(self, a: int, b: int, rel: int) -> None:
        """Impose x_a = rel * x_b."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            if pa != rel * pb:
                self.conflict.add(ra)
            return
        # x_ra = pa * x_a = pa * rel * pb * x_rb
        self.parent[ra] = rb
        self.parity[ra] = pa * rel * pb
        if ra in self.conflict:
            self.conflict.discard(ra)
            self.conflict.add(rb)

    def is_conflicted(self, x: int) -> bool:
        return self.find(x)[0] in self.conflict

    def classes(self) -> List[List[Tuple[int, int]]]:
        """Classes de (élément, signe relatif à la racine), triées par minimum."""
        groups: Dict[int, List[Tuple[int, int]]] = {}
        for x in sorted(self.parent):
            root, sign = self.find(x)
            groups.setdefault(root, []).append((x, sign))
        return sorted(groups.values(), key=lambda c: c[0][0])
