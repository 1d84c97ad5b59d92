"""Configuration module: YAML-backed thresholds, run defaults and paths."""

from src.exceptions import ConfigurationError

from .loader import CONFIG_FILES, Config, config

__all__ = ["CONFIG_FILES", "Config", "ConfigurationError", "config"]
