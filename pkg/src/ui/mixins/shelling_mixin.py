import argparse

from src.core.engine import Outcome


class ShellingMixin:
    def _add_shelling_commands(self, subparsers) -> None:
        p = self._subparser(
            subparsers, "shell",
            "Ordre d'épluchage de Δ_{A,H} (ou de Δ_H si A est vide) et verdict du vérificateur",
        )
        self._add_input_arguments(p, enumerates=True)
        p.add_argument("--seed", type=int, default=None,
                       help="Extension linéaire aléatoire du poset des régions (arrangement vide)")

    def _cmd_shell(self, args: argparse.Namespace) -> Outcome:
        doc = self._read_document(args)
        return self.engine.shell(doc,
                                 force=self._option(args, doc, "force", False),
                                 seed=self._option(args, doc, "seed", None))
