import argparse

from src.core.engine import EXIT_INPUT, IDENTITY_NAMES, Outcome


class VerifyMixin:
    def _add_verify_commands(self, subparsers) -> None:
        p = self._subparser(subparsers, "verify", "Vérifie une identité sur le document d'entrée")
        p.add_argument("identity", nargs="?", default=None, choices=IDENTITY_NAMES,
                       help="Identité à vérifier (ou clé 'identity' du bloc de configuration)")
        self._add_input_arguments(p, enumerates=True)
        p.add_argument("--member", type=int, default=None,
                       help="Indice du membre pour recursion, single et intersection")

        p = self._subparser(subparsers, "report", "Exécute toute la suite de vérification sur un catalogue")
        p.add_argument("--catalog", default=None, help="Catalogue YAML/JSON (défaut : catalogue intégré)")
        p.add_argument("--seed", type=int, default=None, help="Graine du catalogue aléatoire")

    def _cmd_verify(self, args: argparse.Namespace) -> Outcome:
        doc = self._read_document(args)
        identity = args.identity or doc.config.get("identity")
        if identity is None:
            self.log.error("Aucune identité fournie (argument ou clé 'identity')")
            return Outcome([], EXIT_INPUT)
        return self.engine.verify_lines(str(identity), doc,
                                        member=self._option(args, doc, "member", None),
                                        force=self._option(args, doc, "force", False))

    def _cmd_report(self, args: argparse.Namespace) -> Outcome:
        threads = args.threads if args.threads is not None else self.engine.config.threads()
        catalog = self.engine.catalog(args.catalog, args.seed)
        self.log.info("Catalogue : %d entrée(s)", catalog.size())
        return self.engine.report(catalog, max(1, threads))
