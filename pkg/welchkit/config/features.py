"""
Settings and feature flags for welchkit.

Values are read from environment variables (a `.env` file is loaded by the
entry point before this module is consulted). Flags can be flipped at runtime
with `set_feature`, which the test suite uses.
"""

import logging
import math
import os
from typing import Dict, Any

logger = logging.getLogger(__name__)


def _env_flag(name: str, default: str) -> bool:
    return os.environ.get(name, default).lower() in ("true", "1", "yes")


def _env_int(name: str, default: int, minimum: int = 1) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        value = None
    if value is None or value < minimum:
        logger.warning(f"Ignoring {name}={raw!r}: expected an integer ≥ {minimum}, using {default}")
        return default
    return value


def _env_float(name: str, default: float) -> float:
    """Positive finite float from the environment, or the default with a warning."""
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = float(raw)
    except ValueError:
        value = None
    if value is None or not (math.isfinite(value) and value > 0.0):
        logger.warning(f"Ignoring {name}={raw!r}: expected a positive number, using {default}")
        return default
    return value


# Feature flags with default values
FEATURE_FLAGS: Dict[str, bool] = {
    # Opt-in error reporting through sentry-sdk
    "ENABLE_SENTRY": _env_flag("ENABLE_SENTRY", "false"),

    # Debugging features
    "DEBUG_LOGGING": _env_flag("DEBUG_LOGGING", "false"),
}

# Numeric and runtime settings
SETTINGS: Dict[str, Any] = {
    "JOBS": _env_int("WELCHKIT_JOBS", 1),
    "LOG_LEVEL": os.environ.get("WELCHKIT_LOG_LEVEL", "WARNING").upper(),
    "EQUALITY_TOL": _env_float("WELCHKIT_EQUALITY_TOL", 1e-6),
    "EIGEN_METHOD": os.environ.get("WELCHKIT_EIGEN_METHOD", "jacobi").lower(),
    "MAX_NODES": _env_int("WELCHKIT_MAX_NODES", 5000),
    "SENTRY_DSN": os.environ.get("SENTRY_DSN"),
    "ENVIRONMENT": os.environ.get("ENVIRONMENT", "development"),
}


def is_feature_enabled(feature_name: str) -> bool:
    """
    Check if a feature is enabled.

    Args:
        feature_name: The name of the feature to check

    Returns:
        True if the feature is enabled, False otherwise
    """
    return FEATURE_FLAGS.get(feature_name, False)


def set_feature(feature_name: str, enabled: bool) -> None:
    """
    Set a feature flag to enabled or disabled.

    Args:
        feature_name: The name of the feature to set
        enabled: Whether the feature should be enabled
    """
    FEATURE_FLAGS[feature_name] = enabled


def get_setting(name: str) -> Any:
    """
    Look up a runtime setting.

    Args:
        name: Setting key, e.g. "JOBS" or "EQUALITY_TOL"

    Returns:
        The configured value

    Raises:
        KeyError: If the setting does not exist
    """
    return SETTINGS[name]
