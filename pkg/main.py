#!/usr/bin/env python3
"""
ArrLab - Entrée principale de l'application
- Configure le logging (stderr)
- Délègue l'analyse des arguments et l'exécution à l'interface en ligne de commande
"""

import sys
import os
import logging

# Ajoute la racine du projet au PYTHONPATH (exécution locale)
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.ui.cli_app import main as cli_main

def configure_logging(level: int = logging.INFO):
    """Configure un logging simple en console (stderr)."""
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s [%(levelname)s] %(name)s: %(message)s"
    )

def main():
    code = cli_main(sys.argv[1:], configure=configure_logging)
    logging.getLogger("ArrLab").debug("Fin d'exécution (code %d)", code)
    sys.exit(code)

if __name__ == "__main__":
    main()
