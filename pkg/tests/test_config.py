"""
Tests for the configuration loader and logging setup
"""

import logging

import pytest

from src.config import CONFIG_FILES, Config, ConfigurationError, config
from src.logging_config import get_module_logger, resolve_log_dir, setup_run_logging


class TestConfig:
    """Test dot-path access"""

    def test_get_nested_value(self, test_config):
        cfg = Config(test_config)
        assert cfg.get("numerics.thresholds.almost_hermitian") == 1e-10
        assert cfg.get("numerics.thresholds.missing", "fallback") == "fallback"

    def test_get_required_raises(self, test_config):
        cfg = Config(test_config)
        with pytest.raises(ConfigurationError) as exc_info:
            cfg.get_required("run.defaults.tol")
        assert exc_info.value.config_key == "run.defaults.tol"

    def test_get_float_parses_strings(self, test_config):
        """PyYAML reads 1e-10 without a dot as a string"""
        cfg = Config(test_config)
        assert cfg.get_float("numerics.tolerances.hypothesis", 0.0) == 1e-10
        assert cfg.get_float("numerics.tolerances.absent", 2.5) == 2.5

    def test_get_float_rejects_text(self, test_config):
        cfg = Config(test_config)
        cfg.set("numerics.tolerances.identity", "tight")
        with pytest.raises(ConfigurationError):
            cfg.get_float("numerics.tolerances.identity", 1e-8)

    def test_set_creates_sections(self, test_config):
        cfg = Config(test_config)
        cfg.set("catalog.sampling.box", 0.5)
        assert cfg.catalog == {"sampling": {"box": 0.5}}

    def test_section_properties(self, test_config):
        cfg = Config(test_config)
        assert cfg.run["defaults"]["points"] == 3
        assert cfg.paths == {}


class TestShippedConfig:
    """The YAML files in config/ are complete"""

    def test_all_files_loaded(self):
        for key in CONFIG_FILES:
            assert isinstance(config.get(key), dict), key

    def test_numeric_thresholds(self):
        for path in (
            "numerics.thresholds.kernel_eps",
            "numerics.thresholds.almost_hermitian",
            "numerics.tolerances.identity",
            "numerics.sampling.min_abs_det",
        ):
            assert config.get_float(path, -1.0) > 0, path

    def test_default_run_is_declared(self):
        names = [entry["name"] for entry in config.get_required("catalog.default_run")]
        assert "hermitian_rotated_J" in names
        assert config.get_required("run.defaults.suites")

    def test_config_dir_override(self, tmp_path, monkeypatch):
        """TORSION_LAB_CONFIG_DIR points the loader elsewhere; missing files load empty"""
        (tmp_path / "run_config.yaml").write_text("defaults:\n  points: 7\n", encoding="utf-8")
        (tmp_path / "numerics_config.yaml").write_text("- not a mapping\n", encoding="utf-8")
        monkeypatch.setenv("TORSION_LAB_CONFIG_DIR", str(tmp_path))
        cfg = Config()
        assert cfg.get("run.defaults.points") == 7
        assert cfg.numerics == {}
        assert cfg.catalog == {}

    def test_missing_config_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TORSION_LAB_CONFIG_DIR", str(tmp_path / "absent"))
        with pytest.raises(FileNotFoundError):
            Config()


class TestLogging:
    """Test run logging setup"""

    def test_log_dir_from_environment(self, cli_test_env, tmp_path):
        assert resolve_log_dir() == tmp_path / "logs"

    def test_run_log_is_written(self, tmp_path):
        logger = setup_run_logging(log_dir=tmp_path, verbose=False)
        get_module_logger("oracle").debug("solver detail")
        for handler in logger.handlers:
            handler.flush()
        text = (tmp_path / "run.log").read_text(encoding="utf-8")
        assert "torsion-lab run started" in text
        assert "torsion_lab.oracle - DEBUG - solver detail" in text

    def test_quiet_logging_has_no_console_handler(self, tmp_path):
        logger = setup_run_logging(log_dir=tmp_path, verbose=False)
        assert all(isinstance(h, logging.FileHandler) for h in logger.handlers)
