"""
Configuration centralisée d'ArrLab (fichier arrlab.yaml).
Partagée entre le moteur, le catalogue et l'interface en ligne de commande.
- budget.A / budget.B : n maximal pour l'énumération des faces
- threads : parallélisme de la suite de vérification
- catalog.* : paramètres du catalogue par défaut
La variable d'environnement ARRLAB_BUDGET prime sur le fichier.
"""

import copy
import logging
import os
import sys
from typing import Any, Dict, Optional

import yaml

from .errors import ConfigError

try:
    from platformdirs import user_config_dir
except Exception:
    user_config_dir = None

log = logging.getLogger(__name__)

CONFIG_FILENAME = "arrlab.yaml"

DEFAULTS: Dict[str, Any] = {
    "budget": {"A": 8, "B": 5},
    "threads": 1,
    "catalog": {
        "max_graph_n": 5,
        "random_antichains": 50,
        "seed": 2006,
        "max_signed_n": 3,
        "hypergraphs": 20,
    },
}


def _merge(base: Dict[str, Any], extra: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def parse_budget(text: str) -> Dict[str, int]:
    """'A=9,B=6' ou un entier unique appliqué aux deux familles."""
    text = text.strip()
    try:
        if text.isdigit():
            return {"A": int(text), "B": int(text)}
        out = {}
        for part in text.split(","):
            key, value = part.split("=")
            key = key.strip().upper()
            if key not in ("A", "B"):
                raise ValueError(key)
            out[key] = int(value)
        return out
    except ValueError:
        raise ConfigError(f"ARRLAB_BUDGET invalide: {text!r}") from None


class ConfigManager:
    _instance = None

    def __new__(cls, *args, **kwargs):
        if cls._instance is None:
            cls._instance = super(ConfigManager, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        if self._initialized:
            return
        self.config_file = self._locate()
        self.settings: Dict[str, Any] = copy.deepcopy(DEFAULTS)
        self.load()
        self.apply_environment()
        self._initialized = True

    @classmethod
    def reset(cls) -> None:
        """Oublie l'instance courante (rechargement au prochain appel)."""
        cls._instance = None

    # ---------- Emplacement ----------
    @staticmethod
    def _locate() -> str:
        # Ordre : ARRLAB_CONFIG_DIR, dossier utilisateur (mode packagé ou
        # fichier existant), racine du projet.
        env_dir = os.environ.get("ARRLAB_CONFIG_DIR")
        if env_dir:
            return os.path.join(env_dir, CONFIG_FILENAME)
        project_root = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
        is_frozen = bool(getattr(sys, "frozen", False)) or hasattr(sys, "_MEIPASS")
        if user_config_dir:
            user_file = os.path.join(user_config_dir("ArrLab", "ArrLab"), CONFIG_FILENAME)
            if is_frozen or os.path.exists(user_file):
                return user_file
        return os.path.join(project_root, CONFIG_FILENAME)

    # ---------- Chargement ----------
    def load(self) -> None:
        if not os.path.exists(self.config_file):
            log.debug("Pas de fichier de configuration (%s) : valeurs par défaut", self.config_file)
            return
        try:
            with open(self.config_file, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
            if not isinstance(data, dict):
                raise ConfigError("la racine de la configuration doit être un objet")
            _merge(self.settings, data)
            log.info("Configuration chargée depuis %s", self.config_file)
        except (yaml.YAMLError, ConfigError) as e:
            log.error("Configuration ignorée (%s): %s", self.config_file, e)
            self.settings = copy.deepcopy(DEFAULTS)

    def apply_environment(self) -> None:
        raw = os.environ.get("ARRLAB_BUDGET")
        if not raw:
            return
        try:
            self.settings["budget"].update(parse_budget(raw))
            log.info("Budget d'énumération fixé par ARRLAB_BUDGET: %s", self.settings["budget"])
        except ConfigError as e:
            log.error("%s", e)

    # ---------- Accès ----------
    def get(self, key: str, default: Optional[Any] = None) -> Any:
        """Accès par clé pointée, ex. get('catalog.seed')."""
        node: Any = self.settings
        for part in key.split("."):
            if not isinstance(node, dict) or part not in node:
                return default
            node = node[part]
        return node

    def budget(self, family: str) -> int:
        return int(self.get(f"budget.{family}", DEFAULTS["budget"][family]))

    def threads(self) -> int:
        return max(1, int(self.get("threads", 1)))

    def catalog_settings(self) -> Dict[str, Any]:
        return dict(self.get("catalog", {}))
