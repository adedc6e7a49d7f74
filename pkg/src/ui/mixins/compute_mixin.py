import argparse

from src.core.engine import Outcome


class ComputeMixin:
    """Commandes de calcul : chi, tail, fvector, hpoly, hilbert."""

    def _add_compute_commands(self, subparsers) -> None:
        p = self._subparser(subparsers, "chi", "Polynôme caractéristique χ(A;x)")
        self._add_input_arguments(p)
        p = self._subparser(subparsers, "tail", "Polynôme de queue T(A;x)")
        self._add_input_arguments(p)
        p = self._subparser(subparsers, "fvector", "f-vecteur de Δ_{A,H}")
        self._add_input_arguments(p, enumerates=True)
        p = self._subparser(subparsers, "hpoly", "h-polynôme et h-polynôme renversé")
        self._add_input_arguments(p, enumerates=True)
        p = self._subparser(subparsers, "hilbert", "Série et fonction de Hilbert de l'anneau de Stanley-Reisner")
        self._add_input_arguments(p, enumerates=True)
        p.add_argument("--terms", type=int, default=8, help="Nombre de valeurs H(m) affichées (défaut : 8)")

    def _cmd_chi(self, args: argparse.Namespace) -> Outcome:
        return Outcome(self.engine.chi(self._read_document(args)))

    def _cmd_tail(self, args: argparse.Namespace) -> Outcome:
        return Outcome(self.engine.tail(self._read_document(args)))

    def _cmd_fvector(self, args: argparse.Namespace) -> Outcome:
        doc = self._read_document(args)
        return Outcome(self.engine.fvector(doc, self._option(args, doc, "force", False)))

    def _cmd_hpoly(self, args: argparse.Namespace) -> Outcome:
        doc = self._read_document(args)
        return Outcome(self.engine.hpoly(doc, self._option(args, doc, "force", False)))

    def _cmd_hilbert(self, args: argparse.Namespace) -> Outcome:
        doc = self._read_document(args)
        terms = max(0, args.terms)
        return Outcome(self.engine.hilbert(doc, terms, self._option(args, doc, "force", False)))
