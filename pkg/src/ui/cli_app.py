"""
ArrLabApp - Interface en ligne de commande d'ArrLab
- Sous-commandes : chi, tail, fvector, hpoly, hilbert, shell, verify, report
- Lecture du document (--input FICHIER, '-' pour l'entrée standard, ou JSON en ligne)
- Priorité des options : ligne de commande > bloc YAML du document > arrlab.yaml
- Sortie sur stdout, journal sur stderr
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, List, Optional, Sequence, TextIO

from src.core.engine import ArrLabEngine, Outcome
from src.parser.document_parser import ParsedDocument
from src.renderer.report_renderer import ReportRenderer
from src.resources.assets import get_version
from src.resources.help import CLI_DESCRIPTION, CLI_EPILOG

from .mixins import ComputeMixin, ShellingMixin, VerifyMixin

log = logging.getLogger(__name__)


class ArrLabApp(ComputeMixin, ShellingMixin, VerifyMixin):
    """Application ArrLab : analyse des arguments et répartition des commandes."""

    def __init__(self, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None) -> None:
        self.log = log
        self.stdin = stdin if stdin is not None else sys.stdin
        self.stdout = stdout if stdout is not None else sys.stdout
        self.engine = ArrLabEngine(renderer=ReportRenderer(version=get_version()))
        self.parser = self._build_parser()

    # ---------- Arguments ----------
    def _build_parser(self) -> argparse.ArgumentParser:
        self._common = argparse.ArgumentParser(add_help=False)
        self._common.add_argument("--json", action="store_true", help="Sortie en lignes JSON")
        self._common.add_argument("--threads", type=int, default=None, help="Nombre de threads")
        verbosity = self._common.add_mutually_exclusive_group()
        verbosity.add_argument("--verbose", "-v", action="store_true", help="Journal détaillé (DEBUG)")
        verbosity.add_argument("--quiet", "-q", action="store_true", help="Avertissements et erreurs seulement")

        parser = argparse.ArgumentParser(
            prog="arrlab",
            description=CLI_DESCRIPTION,
            epilog=CLI_EPILOG,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        parser.add_argument("--version", action="version", version=f"arrlab {get_version()}")
        subparsers = parser.add_subparsers(dest="command", required=True)
        self._add_compute_commands(subparsers)
        self._add_shelling_commands(subparsers)
        self._add_verify_commands(subparsers)
        return parser

    def _subparser(self, subparsers, name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, help=help_text, description=help_text, parents=[self._common])

    @staticmethod
    def _add_input_arguments(p: argparse.ArgumentParser, enumerates: bool = False) -> None:
        p.add_argument("--input", "-i", default="-",
                       help="Document JSON : chemin, '-' pour stdin, ou JSON en ligne (défaut : -)")
        if enumerates:
            p.add_argument("--force", action="store_true", default=None,
                           help="Ignore le budget d'énumération des faces")

    def parse_args(self, argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
        return self.parser.parse_args(argv)

    # ---------- Entrées ----------
    def _read_document(self, args: argparse.Namespace) -> ParsedDocument:
        source = args.input
        if source == "-":
            text = self.stdin.read()
        elif source.lstrip().startswith(("{", "---")):
            text = source
        else:
            with open(source, "r", encoding="utf-8") as f:
                text = f.read()
        return self.engine.load(text)

    @staticmethod
    def _option(args: argparse.Namespace, doc: ParsedDocument, key: str, default: Any) -> Any:
        value = getattr(args, key, None)
        if value is not None:
            return value
        return doc.config.get(key, default)

    # ---------- Exécution ----------
    def run(self, args: argparse.Namespace) -> int:
        self.engine.renderer.update_settings({"json": args.json})
        handler = getattr(self, f"_cmd_{args.command}")
        outcome = self.engine.run(lambda: handler(args))
        self._emit(outcome)
        log.debug("Commande %s terminée (code %d)", args.command, outcome.code)
        return outcome.code

    def _emit(self, outcome: Outcome) -> None:
        lines: List[str] = self.engine.renderer.header() + outcome.lines
        for line in lines:
            self.stdout.write(line + "\n")
        self.stdout.flush()


def log_level(args: argparse.Namespace) -> int:
    if getattr(args, "verbose", False):
        return logging.DEBUG
    if getattr(args, "quiet", False):
        return logging.WARNING
    return logging.INFO


def main(argv: Optional[Sequence[str]] = None, configure=None) -> int:
    """Point d'entrée : analyse, configure le journal puis exécute la commande."""
    app = ArrLabApp()
    try:
        args = app.parse_args(argv)
    except SystemExit as e:
        # argparse : 0 pour --help/--version, 2 pour une erreur d'usage
        return int(e.code or 0)
    if configure is not None:
        configure(log_level(args))
    return app.run(args)
