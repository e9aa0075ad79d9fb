"""
Configuration management system.

This module provides dataclass-based configuration with JSON persistence,
one section per concern, plus environment overrides read through
python-dotenv.
"""

from __future__ import annotations

import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any

from dotenv import load_dotenv


BACKENDS = ("auto", "bitset", "sorted")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass
class StorageConfig:
    """Edge storage backend policy."""

    backend: str = "auto"  # auto, bitset, sorted
    mem_budget_bits: int = 2**33  # bitset used while binom(n, k) fits


@dataclass
class OracleConfig:
    """Brute-force oracle limits."""

    max_vertices: dict[str, int] = field(default_factory=lambda: {"2": 12, "3": 10})
    default_max_vertices: int = 8

    def cap_for(self, k: int) -> int:
        """
        Get the vertex cap for a uniformity.

        Args:
            k: Uniformity of the hypergraph

        Returns:
            Largest vertex count the oracle accepts
        """
        return self.max_vertices.get(str(k), self.default_max_vertices)


@dataclass
class SearchConfig:
    """Chunk sizes for vectorized scans over colex ranks."""

    rank_chunk: int = 1 << 20
    transversal_chunk: int = 1 << 16


@dataclass
class BenchConfig:
    """Benchmark defaults."""

    repeats: int = 3
    doublings: int = 3
    seed: int = 0


@dataclass
class LogConfig:
    """Logging configuration settings."""

    enabled: bool = False  # rotating file under the config directory
    level: str = "WARNING"  # DEBUG, INFO, WARNING, ERROR
    max_size_mb: int = 10
    backup_count: int = 5
    console_output: bool = True  # stderr


SECTIONS: dict[str, type] = {
    "storage": StorageConfig,
    "oracle": OracleConfig,
    "search": SearchConfig,
    "bench": BenchConfig,
    "log": LogConfig,
}


class Config:
    """Main configuration class with singleton-like access."""

    CONFIG_DIR = Path(
        os.getenv("KPARTITE_CONFIG_DIR", str(Path.home() / ".config" / "kpartite"))
    )
    CONFIG_FILE = CONFIG_DIR / "config.json"

    def __init__(self) -> None:
        self.storage = StorageConfig()
        self.oracle = OracleConfig()
        self.search = SearchConfig()
        self.bench = BenchConfig()
        self.log = LogConfig()

    @staticmethod
    def load(path: Path | None = None) -> Config:
        """
        Load configuration from file.

        Args:
            path: File to read (default: CONFIG_FILE)

        Returns:
            Config instance loaded from file

        Raises:
            FileNotFoundError: If config file doesn't exist
        """
        config = Config()
        source = path or config.CONFIG_FILE

        if not source.exists():
            raise FileNotFoundError(f"Configuration file not found: {source}")

        with source.open(encoding="utf-8") as f:
            config._apply(json.load(f))

        config.apply_env_overrides()
        return config

    def load_instance(self) -> bool:
        """
        Load configuration from JSON file.

        Returns:
            True if loaded successfully, False otherwise
        """
        try:
            if not self.CONFIG_FILE.exists():
                return False

            with self.CONFIG_FILE.open(encoding="utf-8") as f:
                self._apply(json.load(f))

            return True

        except (OSError, ValueError, TypeError):
            return False

    def _apply(self, data: dict[str, Any]) -> None:
        """Replace each section present in a decoded JSON document."""
        for name, section_type in SECTIONS.items():
            if name in data:
                setattr(self, name, section_type(**data[name]))

    def apply_env_overrides(self) -> None:
        """
        Apply environment overrides.

        Reads a .env file if one is found, then PARTITE_MEM_BUDGET_BITS,
        PARTITE_BACKEND and PARTITE_LOG_LEVEL.
        """
        load_dotenv()

        budget = os.getenv("PARTITE_MEM_BUDGET_BITS")
        if budget:
            try:
                self.storage.mem_budget_bits = int(budget)
            except ValueError as e:
                raise ValueError(
                    f"PARTITE_MEM_BUDGET_BITS must be an integer, got {budget!r}"
                ) from e

        backend = os.getenv("PARTITE_BACKEND")
        if backend:
            self.storage.backend = backend.strip().lower()

        level = os.getenv("PARTITE_LOG_LEVEL")
        if level:
            self.log.level = level.strip().upper()

    def validate(self) -> tuple[bool, str]:
        """
        Validate current configuration.

        Returns:
            Tuple of (is_valid, error_message)
        """
        if self.storage.backend not in BACKENDS:
            return False, f"Unknown storage backend: {self.storage.backend}"

        if self.storage.mem_budget_bits < 0:
            return False, "mem_budget_bits must be non-negative"

        if self.oracle.default_max_vertices < 1 or any(
            cap < 1 for cap in self.oracle.max_vertices.values()
        ):
            return False, "Oracle vertex caps must be positive"

        if self.search.rank_chunk < 8 or self.search.transversal_chunk < 1:
            return False, "Search chunk sizes too small"

        if self.bench.repeats < 1:
            return False, "bench.repeats must be at least 1"

        if self.log.level not in LOG_LEVELS:
            return False, f"Unknown log level: {self.log.level}"

        return True, ""

    @property
    def log_dir(self) -> Path:
        """Get log directory path."""
        log_path = self.CONFIG_DIR / "logs"
        log_path.mkdir(parents=True, exist_ok=True)
        return log_path

    def to_dict(self) -> dict[str, Any]:
        """
        Convert configuration to dictionary.

        Returns:
            Dictionary representation of configuration
        """
        return {name: asdict(getattr(self, name)) for name in SECTIONS}


# Global configuration instance
_config: Config | None = None


def get_config() -> Config:
    """
    Return the global configuration instance.

    Returns:
        Singleton Config instance
    """
    global _config  # noqa: PLW0603
    if _config is None:
        _config = Config()
        _config.load_instance()
        _config.apply_env_overrides()
    return _config


def reload_config(path: Path | None = None) -> Config:
    """
    Reload configuration from file.

    Args:
        path: Explicit file to load instead of the default location

    Returns:
        Fresh Config instance
    """
    global _config  # noqa: PLW0603
    if path is not None:
        _config = Config.load(path)
    else:
        _config = Config()
        _config.load_instance()
        _config.apply_env_overrides()
    return _config
