"""
Hiérarchie d'exceptions d'ArrLab.
Toutes les erreurs « métier » dérivent d'ArrLabError, ce qui permet au moteur
de les convertir en codes de sortie sans masquer les erreurs inattendues.
"""

from __future__ import annotations
from typing import Optional


class ArrLabError(Exception):
    """Erreur de base d'ArrLab."""


class NonIntegerCoefficient(ArrLabError):
    """L'interpolation a produit un coefficient non entier."""


class IndexOutOfRange(ArrLabError):
    pass


class NotInLattice(ArrLabError):
    """Le sous-espace demandé n'appartient pas au treillis d'intersection."""


class AmbientMismatch(ArrLabError):
    pass


class NotAnOrderFilter(ArrLabError):
    """Une classe de facettes n'est pas un filtre du poset des régions."""


class NotHyperplanes(ArrLabError):
    """L'opération exige un arrangement d'hyperplans (codimension 1)."""


class NotPure(ArrLabError):
    pass


class NotAPermutation(ArrLabError):
    pass


class EmptyEdgeSet(ArrLabError):
    pass


class EmptyArrangement(ArrLabError):
    """L'opération exige au moins un sous-espace."""


class TooFewMembers(ArrLabError):
    pass


class NotAMember(ArrLabError):
    pass


class BudgetExceeded(ArrLabError):
    """L'énumération des faces dépasserait le budget configuré."""


class ConfigError(ArrLabError):
    pass


class DocumentError(ArrLabError):
    """
    Erreur liée à un document d'entrée.
    - field : chemin JSON fautif (ex: 'subspaces[2].blocks[0]')
    - line, column : position dans le texte source, si connue
    """

    def __init__(self, message: str, field: Optional[str] = None,
                 line: Optional[int] = None, column: Optional[int] = None):
        self.field = field
        self.line = line
        self.column = column
        super().__init__(message)

    def __str__(self) -> str:
        where = []
        if self.line is not None:
            where.append(f"ligne {self.line}")
            if self.column is not None:
                where.append(f"colonne {self.column}")
        if self.field:
            where.append(f"champ {self.field}")
        base = super().__str__()
        return f"{base} ({', '.join(where)})" if where else base


class ParseError(DocumentError):
    """JSON/YAML mal formé."""


class ValidationError(DocumentError):
    """Document bien formé mais contraire aux invariants (antichaîne, étiquettes...)."""
