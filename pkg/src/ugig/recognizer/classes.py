"""Names of the recognizable classes and their witness checks."""

from __future__ import annotations

from ..errors import BadParams

CLASS_NAMES = ("GIG", "UGIG", "USEG", "ORG", "2DORG")
_ALIASES = {"2-DORG": "2DORG", "2DORG": "2DORG", "USEG_H": "USEG", "USEG_V": "USEG"}

# inclusion chain, smallest class first
CHAIN = ("2DORG", "ORG", "UGIG", "USEG", "GIG")


def normalize_class(name: str) -> str:
    key = name.strip().upper()
    key = _ALIASES.get(key, key)
    if key not in CLASS_NAMES:
        raise BadParams(f"unknown class {name!r}; choose from {', '.join(CLASS_NAMES)}")
    return key


def is_ray_class(cls: str) -> bool:
    return cls in ("ORG", "2DORG")
