"""
Vérification machine des identités sur les arrangements plongés dans S_n et B_n.
Chaque vérificateur calcule les deux membres par des chemins indépendants
(énumération des faces d'un côté, treillis ou oracle de l'autre) et rend un
VerificationReport portant les deux membres tels quels.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, List, Optional, Sequence, Tuple, Union

from ..core.arrangement import (
    Ambient, Arrangement, Family, Subspace, char_poly, deletion, restriction, tail_poly,
)
from ..core.complex import (
    FVector, coxeter_abstract, coxeter_f_vector, cone_complex, double_cone, h_polynomial,
    hilbert_function, lift_face, link_abstract, link_f_vector, link_faces, reduced_euler,
    reverse_h,
)
from ..core.errors import ArrLabError, EmptyArrangement, NotHyperplanes, TooFewMembers
from ..core.polyseries import (
    IntPolynomial, RationalSeries, X, eulerian_numerator_a, eulerian_numerator_b,
    polynomial_to_numerator, series_equal,
)
from ..core.shelling import (
    first_violation, poset_of_regions, random_linear_extension, shell_coxeter, shell_link,
)
from ..models.catalog import Catalog
from ..models.graphs import (
    Graph, Hypergraph, SignedGraph, acyclic_orientations, chromatic_poly_brute,
    graph_to_arrangement, hypergraph_to_arrangement, region_count,
    signed_coloring_count, signed_graph_to_arrangement,
)

log = logging.getLogger(__name__)


class Identity(str, Enum):
    DELETION_RESTRICTION = "DeletionRestriction"
    LEMMA_RECURSION = "LemmaRecursion"
    LEMMA_EULERIAN_A = "LemmaEulerianA"
    LEMMA_EULERIAN_B = "LemmaEulerianB"
    LEMMA_SINGLE_A = "LemmaSingleA"
    LEMMA_SINGLE_B = "LemmaSingleB"
    THEOREM_SN = "TheoremSn"
    THEOREM_BN = "TheoremBn"
    STEINGRIMSSON = "Steingrimsson"
    COROLLARY_SN_RING = "CorollarySnRing"
    COROLLARY_SN_IDEAL = "CorollarySnIdeal"
    COROLLARY_BN_RING = "CorollaryBnRing"
    COROLLARY_BN_IDEAL = "CorollaryBnIdeal"
    EULER_WEDGE = "EulerWedge"
    CHROMATIC_CORRESPONDENCE = "ChromaticCorrespondence"
    SIGNED_CHROMATIC = "SignedChromatic"
    REGION_ORIENTATION = "RegionOrientation"
    LINK_INTERSECTION = "LinkIntersection"
    SHELLING_COXETER = "ShellingCoxeter"
    SHELLING_LINK = "ShellingLink"


@dataclass(frozen=True)
class VerificationReport:
    """
    Résultat d'une vérification.
    - descriptor : description courte de l'entrée
    - lhs / rhs : membres sérialisés (JSON), comparables tels quels
    - passed : lhs == rhs exactement
    """
    identity: Identity
    descriptor: str
    lhs: Any
    rhs: Any
    passed: bool

    def to_json(self) -> dict:
        return {"identity": self.identity.value, "input": self.descriptor,
                "lhs": self.lhs, "rhs": self.rhs, "pass": self.passed}


def describe(obj: Any) -> str:
    """Descripteur stable d'une entrée de catalogue."""
    if isinstance(obj, Graph):
        return f"G(n={obj.n}; " + ",".join(f"{i}{j}" for i, j in obj.edges) + ")"
    if isinstance(obj, Hypergraph):
        return f"H(n={obj.n}; " + ",".join("".join(map(str, e)) for e in obj.hyperedges) + ")"
    if isinstance(obj, SignedGraph):
        parts = [f"+{i}{j}" for i, j in obj.positive] + [f"-{i}{j}" for i, j in obj.negative]
        parts += [f"0{i}" for i in obj.zero_vertices]
        return f"SG(n={obj.n}; " + ",".join(parts) + ")"
    return str(obj)


def _report(identity: Identity, descriptor: str, lhs: Any, rhs: Any) -> VerificationReport:
    passed = lhs == rhs
    if not passed:
        log.warning("Échec %s sur %s : %s ≠ %s", identity.value, descriptor, lhs, rhs)
    return VerificationReport(identity, descriptor, lhs, rhs, passed)


def _over(r: RationalSeries, power: int) -> dict:
    """Série écrite sur (1-x)^power quand c'est possible, pour comparer les numérateurs."""
    if r.denom_power <= power:
        return {"num": r.inflate(power).to_json(), "denom_power": power}
    return r.to_json()


def _series_report(identity: Identity, descriptor: str, lhs: RationalSeries,
                   rhs: RationalSeries, power: int) -> VerificationReport:
    lj, rj = _over(lhs, power), _over(rhs, power)
    passed = series_equal(lhs, rhs)
    if passed and lj != rj:
        lj, rj = lhs.to_json(), rhs.to_json()
    if not passed:
        log.warning("Échec %s sur %s : %s ≠ %s", identity.value, descriptor, lhs, rhs)
    return VerificationReport(identity, descriptor, lj, rj, passed)


def _require_hyperplanes(a: Arrangement) -> None:
    if not a.is_hyperplane_arrangement():
        raise NotHyperplanes(f"{a} contient des sous-espaces de codimension ≥ 2")


# ---------- Suppression-restriction ----------
def verify_deletion_restriction(a: Arrangement) -> VerificationReport:
    """χ(A) = χ(A \\ A_i) - χ(A/A_i) pour chaque membre A_i."""
    if not a.subspaces:
        raise EmptyArrangement("arrangement vide")
    chi = char_poly(a).to_json()
    rhs = []
    for i, s in enumerate(a.subspaces):
        rhs.append((char_poly(deletion(a, i)) - char_poly(restriction(a, s))).to_json())
    return _report(Identity.DELETION_RESTRICTION, describe(a), [chi] * len(rhs), rhs)


def verify_lemma_recursion(a: Arrangement, member: Optional[int] = None) -> VerificationReport:
    """
    h(A) = (x-1)^{d(A)-d(A∖A)} h(A∖A) + (x-1)^{d(A)-d(A)} h({A})
           - (x-1)^{d(A)-d(A/A)} h(A/A, H/A),
    les quatre h-polynômes étant obtenus par énumération des faces.
    """
    if len(a.subspaces) < 2:
        raise TooFewMembers(f"au moins deux sous-espaces sont requis ({len(a.subspaces)} fourni(s))")
    i = a.canonical_order()[0] if member is None else member
    deleted = deletion(a, i)
    s = a.subspaces[i]
    single = Arrangement(a.ambient, (s,))
    restricted = restriction(a, s)
    d = a.max_dim
    xm1 = IntPolynomial((-1, 1))
    lhs = h_polynomial(link_f_vector(a))
    rhs = (xm1 ** (d - deleted.max_dim)) * h_polynomial(link_f_vector(deleted))
    rhs = rhs + (xm1 ** (d - s.dim)) * h_polynomial(link_f_vector(single))
    if restricted.subspaces:
        rhs = rhs - (xm1 ** (d - restricted.max_dim)) * h_polynomial(link_f_vector(restricted))
    return _report(Identity.LEMMA_RECURSION, f"{describe(a)} / {s}", lhs.to_json(), rhs.to_json())


# ---------- Polynômes eulériens ----------
def verify_lemma_eulerian(n: int, family: Union[Family, str]) -> VerificationReport:
    """x·h̄(Δ_{S_n}) = A_n(x) ; h̄(Δ_{B_n}) = B_n(x), sur (1-x)^{n+1}."""
    family = Family(family)
    ambient = Ambient(family, n)
    hbar = reverse_h(coxeter_f_vector(ambient))
    if family is Family.A:
        lhs = RationalSeries(X * hbar, n + 1)
        rhs = RationalSeries(eulerian_numerator_a(n), n + 1)
        identity = Identity.LEMMA_EULERIAN_A
    else:
        lhs = RationalSeries(hbar, n + 1)
        rhs = RationalSeries(eulerian_numerator_b(n), n + 1)
        identity = Identity.LEMMA_EULERIAN_B
    return _series_report(identity, str(ambient), lhs, rhs, n + 1)


def verify_lemma_single(s: Subspace, ambient: Ambient) -> VerificationReport:
    """Un seul sous-espace : le lien est une sphère de Coxeter de dimension d(A)-1."""
    a = Arrangement(ambient, (s,))
    hbar = reverse_h(link_f_vector(a))
    d = s.dim
    if ambient.family is Family.A:
        lhs = RationalSeries(X * hbar, d + 2)
        rhs = RationalSeries(eulerian_numerator_a(d + 1), d + 2)
        return _series_report(Identity.LEMMA_SINGLE_A, describe(a), lhs, rhs, d + 2)
    lhs = RationalSeries(hbar, d + 1)
    rhs = RationalSeries(eulerian_numerator_b(d), d + 1)
    return _series_report(Identity.LEMMA_SINGLE_B, describe(a), lhs, rhs, d + 1)


# ---------- Théorèmes principaux ----------
def verify_theorem_sn(a: Arrangement, f_vector: Optional[FVector] = None) -> VerificationReport:
    """x·h̄(A,S_n;x)/(1-x)^{d(A)+2} = Σ m·T(A;m) x^m."""
    if not a.subspaces:
        raise EmptyArrangement("arrangement vide")
    f = f_vector if f_vector is not None else link_f_vector(a)
    power = a.max_dim + 2
    lhs = RationalSeries(X * reverse_h(f), power)
    rhs = polynomial_to_numerator(X * tail_poly(a))
    return _series_report(Identity.THEOREM_SN, describe(a), lhs, rhs, power)


def verify_theorem_bn(a: Arrangement, f_vector: Optional[FVector] = None) -> VerificationReport:
    """h̄(A,B_n;x)/(1-x)^{d(A)+1} = Σ T(A;2m+1) x^m."""
    if not a.subspaces:
        raise EmptyArrangement("arrangement vide")
    f = f_vector if f_vector is not None else link_f_vector(a)
    power = a.max_dim + 1
    lhs = RationalSeries(reverse_h(f), power)
    rhs = polynomial_to_numerator(tail_poly(a).substitute_linear(2, 1))
    return _series_report(Identity.THEOREM_BN, describe(a), lhs, rhs, power)


def verify_theorem(a: Arrangement, f_vector: Optional[FVector] = None) -> VerificationReport:
    if a.ambient.family is Family.A:
        return verify_theorem_sn(a, f_vector)
    return verify_theorem_bn(a, f_vector)


def verify_steingrimsson(g: Graph) -> VerificationReport:
    """x·h̄(Ĝ,S_n;x)/(1-x)^n = Σ (m^n - P_G(m)) x^m, P_G par force brute."""
    a = graph_to_arrangement(g)
    lhs = RationalSeries(X * reverse_h(link_f_vector(a)), g.n)
    rhs = polynomial_to_numerator(IntPolynomial.monomial(g.n) - chromatic_poly_brute(g))
    return _series_report(Identity.STEINGRIMSSON, describe(g), lhs, rhs, g.n)


# ---------- Corollaires (fonctions de Hilbert) ----------
def _window(d: int) -> range:
    return range(2 * d + 5)


def verify_corollary_sn(a: Arrangement) -> Tuple[VerificationReport, VerificationReport]:
    """
    Γ' = double cône sur Δ_{A,S_n}, Γ = double cône sur Δ_{S_n} :
    H_{Γ'}(m) = (m+1)·T(A;m+1) et H_Γ(m) - H_{Γ'}(m) = (m+1)·χ(A;m+1).
    """
    f_sub = double_cone(link_abstract(a)).f_vector()
    f_all = double_cone(coxeter_abstract(a.ambient)).f_vector()
    tail, chi = tail_poly(a), char_poly(a)
    window = _window(f_all.d)
    ring_lhs = [hilbert_function(f_sub, m) for m in window]
    ring_rhs = [(m + 1) * tail(m + 1) for m in window]
    ideal_lhs = [hilbert_function(f_all, m) - hilbert_function(f_sub, m) for m in window]
    ideal_rhs = [(m + 1) * chi(m + 1) for m in window]
    desc = describe(a)
    return (_report(Identity.COROLLARY_SN_RING, desc, ring_lhs, ring_rhs),
            _report(Identity.COROLLARY_SN_IDEAL, desc, ideal_lhs, ideal_rhs))


def verify_corollary_bn(a: Arrangement) -> Tuple[VerificationReport, VerificationReport]:
    """Cônes simples : H_{Γ'}(m) = T(A;2m+1) et H_J(m) = χ(A;2m+1)."""
    f_sub = cone_complex(link_abstract(a)).f_vector()
    f_all = cone_complex(coxeter_abstract(a.ambient)).f_vector()
    tail, chi = tail_poly(a), char_poly(a)
    window = _window(f_all.d)
    ring_lhs = [hilbert_function(f_sub, m) for m in window]
    ring_rhs = [tail(2 * m + 1) for m in window]
    ideal_lhs = [hilbert_function(f_all, m) - hilbert_function(f_sub, m) for m in window]
    ideal_rhs = [chi(2 * m + 1) for m in window]
    desc = describe(a)
    return (_report(Identity.COROLLARY_BN_RING, desc, ring_lhs, ring_rhs),
            _report(Identity.COROLLARY_BN_IDEAL, desc, ideal_lhs, ideal_rhs))


def verify_corollary(a: Arrangement) -> Tuple[VerificationReport, VerificationReport]:
    if a.ambient.family is Family.A:
        return verify_corollary_sn(a)
    return verify_corollary_bn(a)


# ---------- Topologie et oracles ----------
def verify_euler_wedge(a: Arrangement) -> VerificationReport:
    """χ̃(Δ_{A,H}) = (-1)^{dim} (R(A) - 1) : bouquet de R(A)-1 sphères."""
    _require_hyperplanes(a)
    f = link_f_vector(a)
    regions = region_count(a)
    sign = -1 if (f.d - 1) % 2 else 1
    return _report(Identity.EULER_WEDGE, describe(a), reduced_euler(f), sign * (regions - 1))


def verify_chromatic(g: Union[Graph, Hypergraph]) -> VerificationReport:
    """x·χ(Ĝ;x) = P_G(x)."""
    a = graph_to_arrangement(g) if isinstance(g, Graph) else hypergraph_to_arrangement(g)
    lhs = X * char_poly(a)
    return _report(Identity.CHROMATIC_CORRESPONDENCE, describe(g),
                   lhs.to_json(), chromatic_poly_brute(g).to_json())


def verify_signed_chromatic(s: SignedGraph, ms: Sequence[int] = range(4)) -> VerificationReport:
    """χ(Ĝ;2m+1) = nombre de colorations signées à valeurs dans {-m..m}."""
    chi = char_poly(signed_graph_to_arrangement(s))
    return _report(Identity.SIGNED_CHROMATIC, describe(s),
                   [chi(2 * m + 1) for m in ms], [signed_coloring_count(s, m) for m in ms])


def verify_region_orientation(g: Graph) -> VerificationReport:
    """R(Ĝ) = AO(G)."""
    return _report(Identity.REGION_ORIENTATION, describe(g),
                   region_count(graph_to_arrangement(g)), acyclic_orientations(g))


def verify_link_intersection(a: Arrangement, member: Optional[int] = None) -> VerificationReport:
    """Δ_{A∖A,H} ∩ Δ_{{A},H} = image de Δ_{A/A,H/A}, face par face."""
    if len(a.subspaces) < 2:
        raise TooFewMembers(f"au moins deux sous-espaces sont requis ({len(a.subspaces)} fourni(s))")
    i = a.canonical_order()[0] if member is None else member
    s = a.subspaces[i]
    inside = {f.key(): f for f in link_faces(Arrangement(a.ambient, (s,)))}
    rest = {f.key() for f in link_faces(deletion(a, i))}
    lhs = sorted(k for k in inside if k in rest)
    restricted = restriction(a, s)
    rhs = sorted(lift_face(s, f).key() for f in link_faces(restricted)) if restricted.subspaces else []
    return _report(Identity.LINK_INTERSECTION, f"{describe(a)} / {s}",
                   [inside[k].to_json() for k in lhs],
                   [inside[k].to_json() if k in inside else list(k) for k in rhs])


# ---------- Épluchages ----------
def _shelling_verdict(complex_, facets) -> dict:
    v = first_violation(complex_, facets)
    return {"is_shelling": v is None, "first_violation": v}


def verify_shelling_coxeter(ambient: Ambient, rng=None) -> VerificationReport:
    """Une extension linéaire (déterministe, ou aléatoire si rng) de P_H épluche Δ_H."""
    if rng is None:
        order = shell_coxeter(ambient)
        desc = str(ambient)
    else:
        order = random_linear_extension(poset_of_regions(ambient, 0), rng)
        desc = f"{ambient} (extension aléatoire)"
    return _report(Identity.SHELLING_COXETER, desc, _shelling_verdict(order.complex, order.facets),
                   {"is_shelling": True, "first_violation": None})


def verify_shelling_link(a: Arrangement) -> VerificationReport:
    order = shell_link(a)
    return _report(Identity.SHELLING_LINK, describe(a), _shelling_verdict(order.complex, order.facets),
                   {"is_shelling": True, "first_violation": None})


# ---------- Suite complète ----------
Task = Callable[[], Union[VerificationReport, Sequence[VerificationReport]]]


def _guarded(identity: Identity, descriptor: str, task: Task) -> List[VerificationReport]:
    try:
        out = task()
    except ArrLabError as e:
        log.warning("Échec %s sur %s : %s", identity.value, descriptor, e)
        return [VerificationReport(identity, descriptor, {"error": str(e)}, None, False)]
    return [out] if isinstance(out, VerificationReport) else list(out)


def _theorem_identity(a: Arrangement) -> Identity:
    return Identity.THEOREM_SN if a.ambient.family is Family.A else Identity.THEOREM_BN


def _corollary_identity(a: Arrangement) -> Identity:
    return Identity.COROLLARY_SN_RING if a.ambient.family is Family.A else Identity.COROLLARY_BN_RING


def build_tasks(catalog: Catalog) -> List[Tuple[Identity, str, Task]]:
    """Liste ordonnée des vérifications à effectuer sur un catalogue."""
    tasks: List[Tuple[Identity, str, Task]] = []

    def add(identity: Identity, obj: Any, fn: Task) -> None:
        tasks.append((identity, describe(obj), fn))

    for n in catalog.eulerian_a:
        add(Identity.LEMMA_EULERIAN_A, Ambient(Family.A, n), lambda n=n: verify_lemma_eulerian(n, Family.A))
        if n <= 4:
            add(Identity.SHELLING_COXETER, Ambient(Family.A, n),
                lambda n=n: verify_shelling_coxeter(Ambient(Family.A, n)))
    for n in catalog.eulerian_b:
        add(Identity.LEMMA_EULERIAN_B, Ambient(Family.B, n), lambda n=n: verify_lemma_eulerian(n, Family.B))
        if n <= 3:
            add(Identity.SHELLING_COXETER, Ambient(Family.B, n),
                lambda n=n: verify_shelling_coxeter(Ambient(Family.B, n)))

    for g in catalog.graphs:
        a = graph_to_arrangement(g)
        add(Identity.CHROMATIC_CORRESPONDENCE, g, lambda g=g: verify_chromatic(g))
        add(Identity.REGION_ORIENTATION, g, lambda g=g: verify_region_orientation(g))
        add(Identity.STEINGRIMSSON, g, lambda g=g: verify_steingrimsson(g))
        add(Identity.THEOREM_SN, a, lambda a=a: verify_theorem_sn(a))
        add(Identity.COROLLARY_SN_RING, a, lambda a=a: verify_corollary_sn(a))
        add(Identity.EULER_WEDGE, a, lambda a=a: verify_euler_wedge(a))
        add(Identity.DELETION_RESTRICTION, a, lambda a=a: verify_deletion_restriction(a))
        add(Identity.SHELLING_LINK, a, lambda a=a: verify_shelling_link(a))
        if len(a) >= 2:
            add(Identity.LEMMA_RECURSION, a, lambda a=a: verify_lemma_recursion(a))
            add(Identity.LINK_INTERSECTION, a, lambda a=a: verify_link_intersection(a))

    for h in catalog.hypergraphs:
        a = hypergraph_to_arrangement(h)
        add(Identity.CHROMATIC_CORRESPONDENCE, h, lambda h=h: verify_chromatic(h))
        add(Identity.THEOREM_SN, a, lambda a=a: verify_theorem_sn(a))
        add(Identity.COROLLARY_SN_RING, a, lambda a=a: verify_corollary_sn(a))
        add(Identity.DELETION_RESTRICTION, a, lambda a=a: verify_deletion_restriction(a))

    for s in catalog.signed_graphs:
        a = signed_graph_to_arrangement(s)
        add(Identity.SIGNED_CHROMATIC, s, lambda s=s: verify_signed_chromatic(s))
        add(Identity.THEOREM_BN, a, lambda a=a: verify_theorem_bn(a))
        add(Identity.COROLLARY_BN_RING, a, lambda a=a: verify_corollary_bn(a))
        add(Identity.EULER_WEDGE, a, lambda a=a: verify_euler_wedge(a))
        add(Identity.DELETION_RESTRICTION, a, lambda a=a: verify_deletion_restriction(a))
        add(Identity.SHELLING_LINK, a, lambda a=a: verify_shelling_link(a))
        if len(a) >= 2:
            add(Identity.LEMMA_RECURSION, a, lambda a=a: verify_lemma_recursion(a))
            add(Identity.LINK_INTERSECTION, a, lambda a=a: verify_link_intersection(a))

    for a in catalog.antichains:
        add(Identity.DELETION_RESTRICTION, a, lambda a=a: verify_deletion_restriction(a))
        add(_theorem_identity(a), a, lambda a=a: verify_theorem(a))
        add(_corollary_identity(a), a, lambda a=a: verify_corollary(a))
        for s in a.subspaces:
            single = Identity.LEMMA_SINGLE_A if a.ambient.family is Family.A else Identity.LEMMA_SINGLE_B
            add(single, a, lambda s=s, amb=a.ambient: verify_lemma_single(s, amb))
        if len(a) >= 2:
            add(Identity.LEMMA_RECURSION, a, lambda a=a: verify_lemma_recursion(a))
            add(Identity.LINK_INTERSECTION, a, lambda a=a: verify_link_intersection(a))

    for a in catalog.hyperplane_antichains:
        add(Identity.SHELLING_LINK, a, lambda a=a: verify_shelling_link(a))
        add(Identity.EULER_WEDGE, a, lambda a=a: verify_euler_wedge(a))
        add(_theorem_identity(a), a, lambda a=a: verify_theorem(a))

    for fx in catalog.fixtures:
        add(_theorem_identity(fx.arrangement), fx.arrangement,
            lambda fx=fx: verify_theorem(fx.arrangement, fx.f_vector))
    return tasks


def run_all(catalog: Catalog, threads: int = 1) -> List[VerificationReport]:
    """
    Exécute toutes les vérifications du catalogue. L'ordre de sortie suit
    l'ordre du catalogue quel que soit le nombre de threads.
    """
    tasks = build_tasks(catalog)
    if not tasks:
        return []
    log.info("Vérification de %d tâches (%d thread(s))", len(tasks), threads)

    def run(item):
        identity, descriptor, fn = item
        return _guarded(identity, descriptor, fn)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(run, tasks))
    else:
        chunks = [run(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    failed = sum(1 for r in reports if not r.passed)
    log.info("Suite terminée : %d rapports, %d échec(s)", len(reports), failed)
    return reports
