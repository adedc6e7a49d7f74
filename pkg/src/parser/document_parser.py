"""
DocumentParser : lecture des documents d'entrée (JSON).
- Prend en charge un bloc de configuration YAML en tête de fichier.
- Reconnaît arrangements, graphes, hypergraphes et graphes signés.
- Signale les erreurs de syntaxe (ligne, colonne) et de validation (champ).
"""

import json
import logging
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Tuple, Union

import yaml

from ..core.arrangement import Ambient, Arrangement, Family, Subspace, SubspaceA, SubspaceB
from ..core.errors import DocumentError, ParseError, ValidationError
from ..models.graphs import Graph, Hypergraph, SignedGraph

log = logging.getLogger(__name__)

Document = Union[Arrangement, Graph, Hypergraph, SignedGraph]

OPTION_KEYS = ("force", "identity", "member", "seed")


@dataclass
class ParsedDocument:
    """
    Document validé.
    - kind : 'arrangement', 'graph', 'hypergraph' ou 'signed_graph'
    - document : objet du domaine
    - config : options lues dans le bloc YAML de tête
    """
    kind: str
    document: Document
    config: Dict[str, Any] = field(default_factory=dict)


def _field(path: str, sub: str = None) -> str:
    if not sub:
        return path
    if path == "$":
        return sub
    return f"{path}.{sub}" if not sub.startswith("[") else f"{path}{sub}"


class DocumentParser:
    """
    Analyseur des documents ArrLab.
    - Détecte et extrait la configuration YAML.
    - Identifie le type de document d'après ses clés.
    - Construit et valide l'objet du domaine correspondant.
    """
    def __init__(self):
        self.patterns = {
            'config_block': re.compile(r'\A\s*---\s*\n(.*?)\n---\s*(?:\n|\Z)', re.DOTALL),
        }

    def parse(self, text: Union[str, bytes]) -> ParsedDocument:
        """
        Point d'entrée principal.
        - Extrait la configuration YAML.
        - Décode le JSON et construit l'objet.
        """
        if isinstance(text, bytes):
            try:
                text = text.decode("utf-8")
            except UnicodeDecodeError as e:
                raise ParseError(f"document non UTF-8: {e}") from None
        config, body, offset = self.extract_config(text)
        try:
            data = json.loads(body)
        except json.JSONDecodeError as e:
            raise ParseError(f"JSON invalide: {e.msg}", line=e.lineno + offset, column=e.colno) from None
        kind, obj = self.detect(data), self.build(data)
        log.debug("Document %s lu (options: %s)", kind, config)
        return ParsedDocument(kind, obj, config)

    def extract_config(self, text: str) -> Tuple[Dict[str, Any], str, int]:
        """
        Extrait le bloc YAML de configuration en tête de fichier.
        Retourne (config, texte restant, nombre de lignes consommées).
        """
        match = self.patterns['config_block'].match(text)
        if not match:
            return {}, text, 0
        try:
            config = yaml.safe_load(match.group(1)) or {}
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            raise ParseError(f"YAML invalide: {getattr(e, 'problem', e)}",
                             line=mark.line + 2 if mark else None,
                             column=mark.column + 1 if mark else None) from None
        if not isinstance(config, dict):
            raise ValidationError("le bloc de configuration doit être un objet", field="config")
        unknown = sorted(set(config) - set(OPTION_KEYS))
        if unknown:
            log.warning("Options inconnues ignorées : %s", ", ".join(map(str, unknown)))
        consumed = text[:match.end()].count("\n")
        return config, text[match.end():], consumed

    # ---------- Détection et construction ----------
    @staticmethod
    def detect(data: Any) -> str:
        if not isinstance(data, dict):
            raise ValidationError("le document doit être un objet JSON", field="$")
        if "ambient" in data:
            return "arrangement"
        if "hyperedges" in data:
            return "hypergraph"
        if any(k in data for k in ("positive", "negative", "zero_vertices")):
            return "signed_graph"
        if "edges" in data:
            return "graph"
        raise ValidationError("type de document inconnu (ambient, edges, hyperedges, positive...)",
                              field="$")

    def build(self, data: Any, path: str = "$") -> Document:
        kind = self.detect(data) if path == "$" else self._detect_at(data, path)
        try:
            if kind == "arrangement":
                return self.parse_arrangement(data, path)
            n = self._int(data.get("n"), _field(path, "n"))
            if kind == "hypergraph":
                return Hypergraph(n, tuple(self._int_lists(data, "hyperedges", path)))
            if kind == "signed_graph":
                return SignedGraph(n,
                                   tuple(self._int_lists(data, "positive", path)),
                                   tuple(self._int_lists(data, "negative", path)),
                                   tuple(self._ints(data, "zero_vertices", path)))
            return Graph(n, tuple(self._int_lists(data, "edges", path)))
        except DocumentError as e:
            if path != "$" and not (e.field or "").startswith(path):
                e.field = _field(path, e.field)
            raise

    def _detect_at(self, data: Any, path: str) -> str:
        try:
            return self.detect(data)
        except ValidationError as e:
            e.field = path
            raise

    # ---------- Arrangements ----------
    def parse_arrangement(self, data: Dict[str, Any], path: str = "$") -> Arrangement:
        amb = data.get("ambient")
        if not isinstance(amb, dict):
            raise ValidationError("ambient doit être un objet", field=_field(path, "ambient"))
        family_raw = str(amb.get("family", "")).upper()
        if family_raw not in ("A", "B"):
            raise ValidationError(f"famille inconnue {amb.get('family')!r}",
                                  field=_field(path, "ambient.family"))
        n = self._int(amb.get("n"), _field(path, "ambient.n"))
        if n < 1:
            raise ValidationError("n doit être ≥ 1", field=_field(path, "ambient.n"))
        ambient = Ambient(Family(family_raw), n)
        subs: List[Subspace] = []
        for idx, item in enumerate(self._list(data, "subspaces", path)):
            where = _field(path, f"subspaces[{idx}]")
            if not isinstance(item, dict):
                raise ValidationError("un sous-espace est un objet", field=where)
            try:
                subs.append(self.parse_subspace(ambient, item, where))
            except ValidationError as e:
                if not e.field:
                    e.field = where
                raise
        return Arrangement(ambient, tuple(subs))

    def parse_subspace(self, ambient: Ambient, item: Dict[str, Any], where: str) -> Subspace:
        if ambient.family is Family.A:
            blocks = item.get("blocks", [])
            if not isinstance(blocks, list):
                raise ValidationError("blocks doit être une liste", field=f"{where}.blocks")
            for b, blk in enumerate(blocks):
                if not isinstance(blk, list) or not all(isinstance(j, int) for j in blk):
                    raise ValidationError("un bloc est une liste d'entiers", field=f"{where}.blocks[{b}]")
            return SubspaceA(ambient.n, tuple(tuple(b) for b in blocks))
        zero = item.get("zero", [])
        if not isinstance(zero, list) or not all(isinstance(j, int) for j in zero):
            raise ValidationError("zero est une liste d'entiers", field=f"{where}.zero")
        blocks = []
        for b, blk in enumerate(item.get("signed_blocks", []) or []):
            bw = f"{where}.signed_blocks[{b}]"
            if not isinstance(blk, dict):
                raise ValidationError("un bloc signé est un objet", field=bw)
            members = blk.get("members", [])
            signs = blk.get("signs", [])
            if not isinstance(members, list) or not isinstance(signs, list) or len(members) != len(signs):
                raise ValidationError("members et signs doivent avoir la même longueur", field=bw)
            for m in members:
                self._int(m, f"{bw}.members")
            blocks.append((tuple(members), tuple(self._sign(s, f"{bw}.signs") for s in signs)))
        try:
            return SubspaceB(ambient.n, tuple(zero), tuple(blocks))
        except ValidationError as e:
            e.field = e.field or where
            raise

    # ---------- Utilitaires ----------
    @staticmethod
    def _sign(value: Any, where: str) -> int:
        if value in ("+", 1):
            return 1
        if value in ("-", -1):
            return -1
        raise ValidationError(f"signe invalide {value!r}", field=where)

    @staticmethod
    def _int(value: Any, where: str) -> int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ValidationError(f"entier attendu, reçu {value!r}", field=where)
        return value

    @staticmethod
    def _list(data: Dict[str, Any], key: str, path: str) -> list:
        value = data.get(key, [])
        if value is None:
            return []
        if not isinstance(value, list):
            raise ValidationError(f"{key} doit être une liste", field=_field(path, key))
        return value

    def _ints(self, data: Dict[str, Any], key: str, path: str) -> List[int]:
        values = self._list(data, key, path)
        for idx, v in enumerate(values):
            self._int(v, _field(path, f"{key}[{idx}]"))
        return values

    def _int_lists(self, data: Dict[str, Any], key: str, path: str) -> List[list]:
        values = self._list(data, key, path)
        for idx, item in enumerate(values):
            where = _field(path, f"{key}[{idx}]")
            if not isinstance(item, list):
                raise ValidationError("liste d'entiers attendue", field=where)
            for v in item:
                self._int(v, where)
        return values
