"""Factory for transference-lab runtime contexts."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Any

from config import BaseConfig, get_config

from .logging import setup_logging
from .monitoring import configure_timing

__version__ = BaseConfig.TOOL_VERSION


@dataclass(frozen=True)
class LabContext:
    """Resolved settings for one run of the library or CLI."""

    profile: str
    settings: Mapping[str, Any] = field(default_factory=dict)

    def __getitem__(self, key: str) -> Any:
        return self.settings[key]

    def get(self, key: str, default: Any = None) -> Any:
        return self.settings.get(key, default)

    @property
    def seed(self) -> int:
        return int(self.settings["DEFAULT_SEED"])

    @property
    def budget(self) -> int:
        return int(self.settings["SOLVER_NODE_BUDGET"])

    @property
    def jobs(self) -> int:
        return int(self.settings["JOBS"])


def create_lab(profile: str | None = None, **overrides: Any) -> LabContext:
    """Resolve a profile, apply overrides and configure logging and timing."""

    config_cls = get_config(profile)
    settings = _settings_from(config_cls)
    unknown = sorted(key for key in overrides if key not in settings)
    if unknown:
        raise KeyError(f"Unknown setting(s): {', '.join(unknown)}")
    settings.update({key: value for key, value in overrides.items() if value is not None})

    setup_logging(settings, force=True)
    configure_timing(
        enabled=bool(settings["TIMING_LOGS_ENABLED"]),
        threshold_ms=settings["TIMING_MIN_DURATION_MS"],
    )
    return LabContext(profile=(profile or "default").lower(), settings=MappingProxyType(settings))


def _settings_from(config_cls: type[BaseConfig]) -> dict[str, Any]:
    return {name: getattr(config_cls, name) for name in dir(config_cls) if name.isupper()}


__all__ = ["LabContext", "create_lab", "__version__"]
