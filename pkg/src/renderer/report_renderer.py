"""
Rendu des résultats en texte lisible ou en lignes JSON.
- Les polynômes s'affichent en degrés décroissants ("x^2 - 3x + 2") et se
  sérialisent en tableaux croissants ; en mode JSON les deux formes sont émises.
- Le mode JSON commence par un en-tête de version {"arrlab": ...}.
- Sortie déterministe : clés triées, aucun horodatage.
"""

import json
from typing import Any, Dict, List, Optional, Sequence

from ..core.complex import FVector, h_polynomial, hilbert_function, hilbert_series, reduced_euler, reverse_h
from ..core.polyseries import IntPolynomial, series_coefficients


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True)


class ReportRenderer:
    """
    Transforme les résultats du moteur en lignes de sortie.
    - as_json : lignes JSON au lieu du texte
    - version : version écrite dans l'en-tête JSON
    """

    def __init__(self, as_json: bool = False, version: Optional[str] = None):
        self.as_json = as_json
        self.version = version

    def update_settings(self, settings: Dict[str, Any]) -> None:
        if "json" in settings:
            self.as_json = bool(settings["json"])
        if "version" in settings:
            self.version = settings["version"]

    def header(self) -> List[str]:
        return [dumps({"arrlab": self.version})] if self.as_json else []

    # ---------- Polynômes ----------
    def render_polynomial(self, command: str, descriptor: str, p: IntPolynomial) -> List[str]:
        if self.as_json:
            return [dumps({"command": command, "input": descriptor,
                           "poly": p.to_json(), "text": str(p)})]
        return [str(p)]

    # ---------- Données énumératives ----------
    def render_f_vector(self, descriptor: str, f: FVector) -> List[str]:
        chi = reduced_euler(f)
        if self.as_json:
            return [dumps({"command": "fvector", "input": descriptor, "f_vector": f.to_json(),
                           "dimension": f.d - 1, "reduced_euler": chi})]
        counts = ", ".join(map(str, f.counts))
        return [f"f = ({counts})", f"dim = {f.d - 1}", f"χ̃ = {chi}"]

    def render_h(self, descriptor: str, f: FVector) -> List[str]:
        h = h_polynomial(f)
        hbar = reverse_h(f)
        if self.as_json:
            return [dumps({"command": "hpoly", "input": descriptor,
                           "h": h.to_json(), "h_text": str(h),
                           "h_reverse": hbar.to_json(), "h_reverse_text": str(hbar)})]
        return [f"h = {h}", f"h̄ = {hbar}"]

    def render_hilbert(self, descriptor: str, f: FVector, terms: int) -> List[str]:
        series = hilbert_series(f)
        values = [hilbert_function(f, m) for m in range(terms)]
        expansion = series_coefficients(series, terms)
        if self.as_json:
            return [dumps({"command": "hilbert", "input": descriptor, "series": series.to_json(),
                           "text": str(series), "values": values, "expansion": expansion})]
        return [f"Hilb = {series}", "H(m) = " + ", ".join(map(str, values))]

    # ---------- Épluchages ----------
    def render_shelling(self, descriptor: str, facets: Sequence[Sequence[int]],
                        first_violation: Optional[int], labels: Sequence[Any] = ()) -> List[str]:
        verdict = first_violation is None
        if self.as_json:
            return [dumps({"command": "shell", "input": descriptor, "order": [sorted(f) for f in facets],
                           "is_shelling": verdict, "first_violation": first_violation})]
        lines = []
        for j, facet in enumerate(facets, start=1):
            if labels:
                text = " ".join(_label(labels[v]) for v in sorted(facet))
            else:
                text = " ".join(map(str, sorted(facet)))
            lines.append(f"F{j}: {text}")
        lines.append(f"is_shelling: {'true' if verdict else 'false'}"
                     + ("" if verdict else f" (premier échec en j = {first_violation})"))
        return lines

    # ---------- Rapports de vérification ----------
    def render_reports(self, reports: Sequence[Any]) -> List[str]:
        failed = sum(1 for r in reports if not r.passed)
        if self.as_json:
            lines = [dumps(r.to_json()) for r in reports]
            lines.append(dumps({"summary": {"total": len(reports), "failed": failed}}))
            return lines
        lines = []
        for r in reports:
            status = "OK   " if r.passed else "ÉCHEC"
            lines.append(f"[{status}] {r.identity.value:<24} {r.descriptor}")
            if not r.passed:
                lines.append(f"        lhs = {dumps(r.lhs)}")
                lines.append(f"        rhs = {dumps(r.rhs)}")
        lines.append(f"{len(reports)} rapport(s), {failed} échec(s)")
        return lines


def _label(vertex: Any) -> str:
    """Sommet de Δ_H : sous-ensemble de [n] (type A) ou coordonnées signées (type B)."""
    items = sorted(vertex)
    if items and isinstance(items[0], tuple):
        return "{" + ",".join(("" if s > 0 else "-") + str(j) for j, s in items) + "}"
    return "{" + ",".join(map(str, items)) + "}"
