"""
Layered settings: package defaults, a YAML file, DYNSTR_* environment
variables (a local .env is honoured) and explicit overrides, validated
against SETTINGS_SCHEMA.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml
from dotenv import load_dotenv

from src.core.constants import DEFAULT_SETTINGS, ENV_PREFIX, SETTINGS_SCHEMA
from src.core.exceptions import ConfigurationError
from src.core.utils import load_config_from_env, merge_configurations, validate_json_schema

logger = logging.getLogger(__name__)

DEFAULT_CONFIG_PATH = Path(__file__).with_name("engine_config.yaml")


def _read_yaml(path: Path) -> Dict[str, Any]:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = yaml.safe_load(handle) or {}
    except OSError as e:
        raise ConfigurationError(f"Cannot read settings file {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigurationError(f"Malformed YAML in {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigurationError(f"Settings file {path} must hold a mapping")
    return data


def load_settings(
    config_path: Optional[Union[str, Path]] = None,
    overrides: Optional[Dict[str, Any]] = None,
    use_env: bool = True,
) -> Dict[str, Any]:
    """
    Build the effective settings.

    Args:
        config_path: YAML file; defaults to config/engine_config.yaml when present
        overrides: Highest-priority values, merged last
        use_env: Read DYNSTR_* variables (after loading .env)

    Returns:
        Validated settings dictionary

    Raises:
        ConfigurationError: On unreadable YAML or a schema violation
    """
    layers = [DEFAULT_SETTINGS]

    path = Path(config_path) if config_path else DEFAULT_CONFIG_PATH
    if config_path or path.exists():
        layers.append(_read_yaml(path))
        logger.debug(f"Loaded settings file {path}")

    if use_env:
        load_dotenv()
        layers.append(load_config_from_env(ENV_PREFIX))

    layers.append(overrides or {})
    settings = merge_configurations(*layers)
    validate_json_schema(settings, SETTINGS_SCHEMA)
    return settings
