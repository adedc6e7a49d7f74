"""
Moteur principal : orchestre lecture des documents, calculs et rendu.
Applique le garde-fou d'énumération et traduit les erreurs en codes de sortie.
"""

import logging
import random
from dataclasses import dataclass
from typing import Callable, List, Optional

from ..models.catalog import Catalog, default_catalog, load_catalog
from ..models.graphs import Graph, to_arrangement
from ..parser.document_parser import DocumentParser, ParsedDocument
from ..renderer.report_renderer import ReportRenderer
from ..verify import identities as idv
from .arrangement import Ambient, Arrangement, char_poly, tail_poly
from .complex import FVector, link_f_vector
from .config_manager import ConfigManager
from .errors import ArrLabError, BudgetExceeded, DocumentError, IndexOutOfRange
from .shelling import first_violation, poset_of_regions, random_linear_extension, shell_coxeter, shell_link

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

IDENTITY_NAMES = (
    "deletion-restriction", "recursion", "eulerian", "single", "theorem",
    "steingrimsson", "corollary", "euler-wedge", "chromatic", "signed-chromatic",
    "regions", "intersection", "shelling",
)


@dataclass
class Outcome:
    """Résultat d'une commande : lignes à afficher et code de sortie."""
    lines: List[str]
    code: int = EXIT_OK


class ArrLabEngine:
    def __init__(self, config: Optional[ConfigManager] = None, renderer: Optional[ReportRenderer] = None):
        self.parser = DocumentParser()
        self.renderer = renderer or ReportRenderer()
        self._config = config

    @property
    def config(self) -> ConfigManager:
        """Configuration chargée au premier accès, une fois le journal configuré."""
        if self._config is None:
            self._config = ConfigManager()
        return self._config

    # ---------- Entrées ----------
    def load(self, text) -> ParsedDocument:
        return self.parser.parse(text)

    def guard(self, ambient: Ambient, force: bool = False) -> None:
        """Refuse l'énumération des faces au-delà du budget, sauf --force."""
        budget = self.config.budget(ambient.family.value)
        if ambient.n > budget and not force:
            log.error("Énumération refusée : %s dépasse le budget n ≤ %d", ambient, budget)
            raise BudgetExceeded(f"{ambient} dépasse le budget d'énumération (n ≤ {budget}); "
                                 f"utiliser --force ou ARRLAB_BUDGET")

    def arrangement(self, doc: ParsedDocument) -> Arrangement:
        return to_arrangement(doc.document)

    # ---------- Commandes de calcul ----------
    def chi(self, doc: ParsedDocument) -> List[str]:
        a = self.arrangement(doc)
        return self.renderer.render_polynomial("chi", idv.describe(doc.document), char_poly(a))

    def tail(self, doc: ParsedDocument) -> List[str]:
        a = self.arrangement(doc)
        return self.renderer.render_polynomial("tail", idv.describe(doc.document), tail_poly(a))

    def f_vector(self, doc: ParsedDocument, force: bool = False) -> FVector:
        a = self.arrangement(doc)
        self.guard(a.ambient, force)
        return link_f_vector(a)

    def fvector(self, doc: ParsedDocument, force: bool = False) -> List[str]:
        return self.renderer.render_f_vector(idv.describe(doc.document), self.f_vector(doc, force))

    def hpoly(self, doc: ParsedDocument, force: bool = False) -> List[str]:
        return self.renderer.render_h(idv.describe(doc.document), self.f_vector(doc, force))

    def hilbert(self, doc: ParsedDocument, terms: int, force: bool = False) -> List[str]:
        return self.renderer.render_hilbert(idv.describe(doc.document), self.f_vector(doc, force), terms)

    def shell(self, doc: ParsedDocument, force: bool = False, seed: Optional[int] = None) -> Outcome:
        """
        Épluchage de Δ_{A,H} (A d'hyperplans) ; pour un arrangement vide,
        épluchage de Δ_H lui-même (extension aléatoire si une graine est donnée).
        """
        a = self.arrangement(doc)
        self.guard(a.ambient, force)
        if not a.subspaces:
            if seed is None:
                order = shell_coxeter(a.ambient)
            else:
                order = random_linear_extension(poset_of_regions(a.ambient, 0), random.Random(seed))
        else:
            order = shell_link(a)
        v = first_violation(order.complex, order.facets)
        lines = self.renderer.render_shelling(idv.describe(doc.document), order.facets, v,
                                              order.complex.labels)
        return Outcome(lines, EXIT_OK if v is None else EXIT_FAILED)

    # ---------- Vérifications ----------
    def verify(self, identity: str, doc: ParsedDocument, member: Optional[int] = None,
               force: bool = False) -> List[idv.VerificationReport]:
        obj = doc.document
        a = self.arrangement(doc)
        if identity not in ("deletion-restriction", "chromatic", "signed-chromatic"):
            self.guard(a.ambient, force)
        members = range(len(a.subspaces)) if member is None else [member]
        if member is not None and not 0 <= member < len(a.subspaces):
            raise IndexOutOfRange(f"membre {member} hors de [0, {len(a.subspaces)})")
        if identity == "deletion-restriction":
            return [idv.verify_deletion_restriction(a)]
        if identity == "recursion":
            return [idv.verify_lemma_recursion(a, i) for i in members]
        if identity == "intersection":
            return [idv.verify_link_intersection(a, i) for i in members]
        if identity == "eulerian":
            return [idv.verify_lemma_eulerian(a.ambient.n, a.ambient.family)]
        if identity == "single":
            return [idv.verify_lemma_single(a.subspaces[i], a.ambient) for i in members]
        if identity == "theorem":
            return [idv.verify_theorem(a)]
        if identity == "corollary":
            return list(idv.verify_corollary(a))
        if identity == "euler-wedge":
            return [idv.verify_euler_wedge(a)]
        if identity == "shelling":
            return [idv.verify_shelling_link(a)]
        if identity == "steingrimsson":
            return [idv.verify_steingrimsson(self._graph(obj))]
        if identity == "regions":
            return [idv.verify_region_orientation(self._graph(obj))]
        if identity == "chromatic":
            if doc.kind not in ("graph", "hypergraph"):
                raise DocumentError("chromatic attend un graphe ou un hypergraphe", field="$")
            return [idv.verify_chromatic(obj)]
        if identity == "signed-chromatic":
            if doc.kind != "signed_graph":
                raise DocumentError("signed-chromatic attend un graphe signé", field="$")
            return [idv.verify_signed_chromatic(obj)]
        raise DocumentError(f"identité inconnue {identity!r} ({', '.join(IDENTITY_NAMES)})",
                            field="identity")

    @staticmethod
    def _graph(obj) -> Graph:
        if not isinstance(obj, Graph):
            raise DocumentError("un graphe simple est attendu", field="$")
        return obj

    def verify_lines(self, identity: str, doc: ParsedDocument, member: Optional[int] = None,
                     force: bool = False) -> Outcome:
        reports = self.verify(identity, doc, member, force)
        code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
        return Outcome(self.renderer.render_reports(reports), code)

    def catalog(self, path: Optional[str] = None, seed: Optional[int] = None) -> Catalog:
        if path:
            return load_catalog(path)
        settings = self.config.catalog_settings()
        return default_catalog(
            max_graph_n=int(settings.get("max_graph_n", 5)),
            max_signed_n=int(settings.get("max_signed_n", 3)),
            hypergraphs=int(settings.get("hypergraphs", 20)),
            random_antichains=int(settings.get("random_antichains", 50)),
            seed=int(seed if seed is not None else settings.get("seed", 2006)),
            budget_a=self.config.budget("A"),
            budget_b=self.config.budget("B"),
        )

    def report(self, catalog: Catalog, threads: int = 1) -> Outcome:
        reports = idv.run_all(catalog, threads)
        code = EXIT_OK if all(r.passed for r in reports) else EXIT_FAILED
        return Outcome(self.renderer.render_reports(reports), code)

    # ---------- Exécution protégée ----------
    def run(self, action: Callable[[], object]) -> Outcome:
        """
        Exécute une commande et traduit ses erreurs :
        0 succès, 1 vérification en échec, 2 entrée invalide.
        """
        try:
            result = action()
        except ArrLabError as e:
            log.error("%s: %s", type(e).__name__, e)
            return Outcome([], EXIT_INPUT)
        except OSError as e:
            log.error("Lecture impossible: %s", e)
            return Outcome([], EXIT_INPUT)
        except Exception:
            log.exception("Erreur inattendue dans le moteur")
            raise
        if isinstance(result, Outcome):
            return result
        return Outcome(list(result))
