"""
Logging configuration for torsion-lab

Console output at INFO, optional run log file at DEBUG.
"""

import logging
import os
import sys
from datetime import datetime
from pathlib import Path

from src.config import config


class TorsionLabLogger:
    """Centralized logger for the application"""

    def __init__(
        self, name: str = "torsion_lab", log_file: Path | None = None, console_output: bool = True
    ):
        """
        Initialize logger

        Args:
            name: Logger name (usually "torsion_lab" for the root application logger)
            log_file: Path to log file (optional)
            console_output: Whether to print to console
        """
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)

        # Clear existing handlers
        self.logger.handlers = []

        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
        )

        if console_output:
            console_handler = logging.StreamHandler(sys.stdout)
            console_handler.setLevel(logging.INFO)
            console_handler.setFormatter(formatter)
            self.logger.addHandler(console_handler)

        if log_file:
            log_file.parent.mkdir(parents=True, exist_ok=True)
            file_handler = logging.FileHandler(log_file, mode="a", encoding="utf-8")
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(formatter)
            self.logger.addHandler(file_handler)

    def get_logger(self) -> logging.Logger:
        """Get the underlying logger instance"""
        return self.logger


def resolve_log_dir() -> Path:
    """Log directory from TORSION_LAB_LOG_DIR, else from paths_config.yaml"""
    return Path(
        os.environ.get("TORSION_LAB_LOG_DIR", config.get("paths.directories.logs", "data/logs"))
    )


def setup_run_logging(log_dir: Path | None = None, verbose: bool = True) -> logging.Logger:
    """
    Setup logging for a verification run

    Args:
        log_dir: Directory for the run log (defaults to resolve_log_dir())
        verbose: Whether to also print to console

    Returns:
        Configured logger instance
    """
    if log_dir is None:
        log_dir = resolve_log_dir()
    log_file = log_dir / config.get("paths.files.run_log", "run.log")

    logger = TorsionLabLogger(
        name="torsion_lab", log_file=log_file, console_output=verbose
    ).get_logger()

    logger.info("=" * 70)
    logger.info(f"torsion-lab run started: {datetime.now().isoformat()}")
    logger.info(f"Run log: {log_file}")
    logger.info("=" * 70)

    return logger


def get_module_logger(module_name: str) -> logging.Logger:
    """
    Get logger for a specific module

    Args:
        module_name: Name of the module (e.g., 'oracle', 'catalog')

    Returns:
        Logger instance
    """
    return logging.getLogger(f"torsion_lab.{module_name}")
