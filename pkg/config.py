"""Configuration profiles for transference-lab."""

from __future__ import annotations

SUPPORTED_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


class BaseConfig:
    """Base configuration shared across profiles."""

    APP_NAME = "transference-lab"
    TOOL_VERSION = "0.1.0"
    SCHEMA_VERSION = 1

    DEFAULT_SEED = 20090422
    SOLVER_NODE_BUDGET = 10_000_000
    BRUTEFORCE_VERTEX_LIMIT = 24
    EXACT_PROBE_VERTEX_LIMIT = 24
    LOCAL_SEARCH_ITERATIONS = 20_000
    UNDECIDED_TOLERANCE = 0.10
    MONTECARLO_TRIALS = 10_000
    JOBS = 1

    LOG_LEVEL = "WARNING"
    LOG_JSON_ENABLED = False
    LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"
    TIMING_LOGS_ENABLED = False
    TIMING_MIN_DURATION_MS: float | None = 5_000.0


class DefaultConfig(BaseConfig):
    """Configuration used by the command line unless told otherwise."""


class DebugConfig(BaseConfig):
    """Verbose structured logging with every timing captured."""

    LOG_LEVEL = "DEBUG"
    LOG_JSON_ENABLED = True
    TIMING_LOGS_ENABLED = True
    TIMING_MIN_DURATION_MS = None


class TestingConfig(BaseConfig):
    """Small budgets so the unit suite stays fast."""

    SOLVER_NODE_BUDGET = 200_000
    LOCAL_SEARCH_ITERATIONS = 2_000
    MONTECARLO_TRIALS = 2_000


CONFIG_BY_PROFILE: dict[str, type[BaseConfig]] = {
    "default": DefaultConfig,
    "debug": DebugConfig,
    "testing": TestingConfig,
}


def get_config(profile: str | None = None) -> type[BaseConfig]:
    """Return the config class for the requested profile.

    Args:
        profile: Optional profile identifier; ``None`` selects ``default``.

    Raises:
        KeyError: If the requested profile is not defined.
        ValueError: If the profile carries unusable limits.
    """

    profile_name = (profile or "default").strip().lower()
    try:
        config_cls = CONFIG_BY_PROFILE[profile_name]
    except KeyError as exc:
        raise KeyError(f"Unknown profile '{profile_name}'") from exc

    _validate_limits(config_cls)
    return config_cls


def _validate_limits(config_cls: type[BaseConfig]) -> None:
    if config_cls.SOLVER_NODE_BUDGET < 1:
        raise ValueError("SOLVER_NODE_BUDGET must be a positive integer.")
    if not 0 <= config_cls.UNDECIDED_TOLERANCE <= 1:
        raise ValueError("UNDECIDED_TOLERANCE must lie in [0, 1].")
    if config_cls.JOBS < 1:
        raise ValueError("JOBS must be at least 1.")

    level = str(config_cls.LOG_LEVEL).upper()
    if level not in SUPPORTED_LOG_LEVELS:
        raise ValueError(
            f"Unsupported LOG_LEVEL '{config_cls.LOG_LEVEL}'. "
            f"Allowed values: {sorted(SUPPORTED_LOG_LEVELS)}"
        )
