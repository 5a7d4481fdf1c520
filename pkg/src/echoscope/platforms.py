"""Open registry of platform identifiers.

Platform ids are lowercase strings, not an enum, so a new platform can be
analyzed by registering it at runtime (or simply naming it in a run config)
without code changes. The nine ids used by the bundled fixtures and default
data tables are pre-registered.
"""

from __future__ import annotations

from .errors import ConfigurationError

# id -> display name
_REGISTRY: dict[str, str] = {}

DEFAULT_PLATFORMS = {
    "facebook": "Facebook",
    "reddit": "Reddit",
    "twitter": "Twitter",
    "youtube": "YouTube",
    "bitchute": "BitChute",
    "gab": "Gab",
    "parler": "Parler",
    "scored": "Scored",
    "voat": "Voat",
}


def register_platform(platform_id: str, display_name: str | None = None) -> str:
    """Register a platform id (idempotent). Returns the canonical id."""
    pid = platform_id.strip().lower()
    if not pid:
        raise ConfigurationError("platform id must be a non-empty string")
    _REGISTRY.setdefault(pid, display_name or platform_id.strip())
    return pid


def is_registered(platform_id: str) -> bool:
    return platform_id in _REGISTRY


def require_platform(platform_id: str) -> str:
    if platform_id not in _REGISTRY:
        raise ConfigurationError(f"unknown platform id: {platform_id!r}")
    return platform_id


def display_name(platform_id: str) -> str:
    return _REGISTRY.get(platform_id, platform_id)


def registered_platforms() -> list[str]:
    return sorted(_REGISTRY)


for _pid, _name in DEFAULT_PLATFORMS.items():
    register_platform(_pid, _name)
