from __future__ import annotations
import os
import sys
from functools import lru_cache
from typing import Dict, Optional

def _project_root() -> str:
    # Support PyInstaller (sys._MEIPASS) et exécution locale
    if hasattr(sys, "_MEIPASS"):
        return getattr(sys, "_MEIPASS")
    # src/resources/assets.py -> remonter à la racine du projet
    return os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

def _candidates():
    return [
        "version.txt",
        os.path.join("src", "resources", "version.txt"),
    ]

def get_version_path() -> Optional[str]:
    root = _project_root()
    for rel in _candidates():
        p = os.path.join(root, rel)
        if os.path.exists(p):
            return p
    return None

def read_version_info(path: str) -> Dict[str, str]:
    """Lit les lignes clé=valeur de version.txt."""
    info: Dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as f:
        for line in f:
            if "=" in line:
                key, value = line.split("=", 1)
                info[key.strip()] = value.strip()
    return info

@lru_cache(maxsize=1)
def get_version() -> str:
    path = get_version_path()
    if not path:
        return "0.0.0"
    return read_version_info(path).get("ProductVersion", "0.0.0")
