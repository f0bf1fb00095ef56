"""
Utilities Module

Common helpers used across the package: configuration merging and validation,
environment loading, integer arithmetic helpers and seeded random generators.

Categories:
- Configuration Management
- Integer Helpers
- Random Generators

Author: Dynamic Strings Team
Version: 1.0.0
"""

import logging
import math
import os
from typing import Any, Dict, Optional, Tuple

import numpy as np
from jsonschema import ValidationError as JsonValidationError
from jsonschema import validate

from .constants import ENV_PREFIX, ENV_SETTINGS_MAP
from .exceptions import ConfigurationError

logger = logging.getLogger(__name__)

# =============================================================================
# CONFIGURATION MANAGEMENT
# =============================================================================


def merge_configurations(*configs: Dict[str, Any]) -> Dict[str, Any]:
    """
    Merge multiple configuration dictionaries with deep merging.

    Args:
        configs: Configuration dictionaries to merge, later ones win

    Returns:
        Merged configuration dictionary
    """
    result: Dict[str, Any] = {}

    for config in configs:
        if not isinstance(config, dict):
            continue

        for key, value in config.items():
            if key in result and isinstance(result[key], dict) and isinstance(value, dict):
                result[key] = merge_configurations(result[key], value)
            else:
                result[key] = value

    return result


def _coerce(value: str, expected_type: type) -> Any:
    if expected_type is bool:
        return value.lower() in ('true', '1', 'yes', 'on')
    return expected_type(value)


def load_config_from_env(prefix: str = ENV_PREFIX) -> Dict[str, Any]:
    """
    Load configuration overrides from environment variables.

    Only keys listed in ENV_SETTINGS_MAP are recognised; values are converted
    to the mapped type and placed at the mapped settings path.

    Args:
        prefix: Prefix for environment variables

    Returns:
        Nested dictionary of overrides
    """
    config: Dict[str, Any] = {}

    for key, value in os.environ.items():
        if not key.startswith(prefix):
            continue
        config_key = key[len(prefix):].lower()
        if config_key not in ENV_SETTINGS_MAP:
            logger.debug(f"Ignoring unknown environment setting {key}")
            continue
        path, expected_type = ENV_SETTINGS_MAP[config_key]
        try:
            coerced = _coerce(value, expected_type)
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Environment setting {key}={value!r}: {e}") from e
        node = config
        for part in path[:-1]:
            node = node.setdefault(part, {})
        node[path[-1]] = coerced

    return config


def validate_json_schema(data: Dict[str, Any], schema: Dict[str, Any]) -> bool:
    """
    Validate data against JSON schema.

    Raises:
        ConfigurationError: If validation fails
    """
    try:
        validate(instance=data, schema=schema)
        return True
    except JsonValidationError as e:
        location = ".".join(str(p) for p in e.absolute_path) or "<root>"
        logger.error(f"Settings validation failed at {location}: {e.message}")
        raise ConfigurationError(f"Invalid setting {location}: {e.message}") from e


# =============================================================================
# INTEGER HELPERS
# =============================================================================


def ceil_sqrt(value: int) -> int:
    """Smallest integer r with r*r >= value (0 for non-positive input)"""
    if value <= 0:
        return 0
    root = math.isqrt(value)
    return root if root * root == value else root + 1


def ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def next_power_of_two(value: int) -> int:
    return 1 if value <= 1 else 1 << (value - 1).bit_length()


def ceil_log2(value: int) -> int:
    return 0 if value <= 1 else (value - 1).bit_length()


# =============================================================================
# RANDOM GENERATORS
# =============================================================================


def make_rng(seed: Optional[int], *stream: int) -> np.random.Generator:
    """Named, seeded generator; `stream` separates independent consumers"""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(stream)))


def split_ratio(ratio: str) -> Tuple[int, int]:
    """Parse an 'U:Q' operation mix"""
    left, _, right = ratio.partition(':')
    return int(left), int(right)
