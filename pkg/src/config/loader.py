"""Configuration loader for torsion-lab.

Reads the YAML files in config/ once at import and exposes them through the
`config` singleton. Numeric thresholds, run defaults and paths all come from
here; kernels take an optional override and fall back to these values.
"""

import logging
import os
from pathlib import Path
from typing import Any, cast

import yaml

from src.exceptions import ConfigurationError

# logging_config imports this module, so the logger is fetched by name here
logger = logging.getLogger("torsion_lab.config")

CONFIG_FILES = {
    "numerics": "numerics_config.yaml",
    "catalog": "catalog_config.yaml",
    "run": "run_config.yaml",
    "paths": "paths_config.yaml",
}

_MISSING = object()


def _read_section(config_path: Path) -> dict[str, Any]:
    """One YAML file as a dict; anything unusable becomes an empty section."""
    if not config_path.exists():
        logger.warning(f"Config file {config_path.name} not found at {config_path}")
        return {}
    try:
        with open(config_path, encoding="utf-8") as f:
            loaded = yaml.safe_load(f)
    except yaml.YAMLError as e:
        logger.warning(f"Config file {config_path.name} is not valid YAML ({e}). Using empty config.")
        return {}
    if not isinstance(loaded, dict):
        logger.warning(
            f"Config file {config_path.name} must contain a dictionary, "
            f"got {type(loaded).__name__}. Using empty config."
        )
        return {}
    return loaded


class Config:
    """Dot-path access to the numerics, catalog, run and paths sections."""

    def __init__(self, config_dict: dict[str, Any] | None = None):
        """
        Args:
            config_dict: Sections to use instead of the files in config/
                        (testing mode; nothing is read from disk)
        """
        self._configs: dict[str, Any]
        self._config_dir: Path | None

        if config_dict is not None:
            self._configs = config_dict
            self._config_dir = None
        else:
            self._configs = {}
            self._config_dir = self._find_config_dir()
            self._load_all_configs()

    def _find_config_dir(self) -> Path:
        """TORSION_LAB_CONFIG_DIR, else config/ next to src/."""
        override = os.environ.get("TORSION_LAB_CONFIG_DIR")
        # src/config/loader.py -> project root
        config_dir = (
            Path(override) if override else Path(__file__).resolve().parents[2] / "config"
        )
        if not config_dir.exists():
            raise FileNotFoundError(
                f"Config directory not found at {config_dir}. "
                f"Please ensure the config/ directory exists in the project root."
            )
        return config_dir

    def _load_all_configs(self) -> None:
        if self._config_dir is None:
            return
        for key, filename in CONFIG_FILES.items():
            self._configs[key] = _read_section(self._config_dir / filename)

    def _lookup(self, path: str) -> Any:
        value: Any = self._configs
        for part in path.split("."):
            if not isinstance(value, dict) or part not in value:
                return _MISSING
            value = value[part]
        return value

    def get(self, path: str, default: Any = None) -> Any:
        """Value at a dot path, or `default` if any part of the path is missing.

        Example:
            >>> config.get("run.defaults.points")
            25
        """
        value = self._lookup(path)
        return default if value is _MISSING else value

    def get_required(self, path: str) -> Any:
        """Value at a dot path that the config files must provide.

        Raises:
            ConfigurationError: If the path is missing
        """
        value = self._lookup(path)
        if value is _MISSING:
            raise ConfigurationError(
                f"Required configuration value not found. Please add '{path}' to your config file.",
                config_key=path,
            )
        return value

    def get_float(self, path: str, default: float) -> float:
        """Numeric lookup that tolerates YAML strings such as '1e-10'.

        Raises:
            ConfigurationError: If the value cannot be read as a number
        """
        value = self.get(path, default)
        try:
            return float(value)
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"expected a number, got {value!r}", config_key=path) from e

    def set(self, path: str, value: Any) -> None:
        """Set a value at a dot path, creating intermediate sections."""
        *parents, leaf = path.split(".")
        current = self._configs
        for part in parents:
            if not isinstance(current.get(part), dict):
                current[part] = {}
            current = current[part]
        current[leaf] = value

    def _section(self, name: str) -> dict[str, Any]:
        return cast(dict[str, Any], self._configs.get(name, {}))

    @property
    def numerics(self) -> dict[str, Any]:
        """Thresholds and tolerances."""
        return self._section("numerics")

    @property
    def catalog(self) -> dict[str, Any]:
        """Default manifold list and sampling box."""
        return self._section("catalog")

    @property
    def run(self) -> dict[str, Any]:
        """Run defaults and parallelism."""
        return self._section("run")

    @property
    def paths(self) -> dict[str, Any]:
        """Log and report locations."""
        return self._section("paths")

    def reload(self) -> None:
        """Re-read every file in the config directory."""
        self._configs.clear()
        self._load_all_configs()


config = Config()
