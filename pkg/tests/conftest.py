"""Shared fixtures: every test runs against a fresh configuration and logger."""

from __future__ import annotations

from typing import TYPE_CHECKING

import pytest

from src.core import config as config_module
from src.core import logger as logger_module
from src.core.hypergraph import Hypergraph


if TYPE_CHECKING:
    from collections.abc import Iterator
    from pathlib import Path


ENV_OVERRIDES = ("PARTITE_MEM_BUDGET_BITS", "PARTITE_BACKEND", "PARTITE_LOG_LEVEL")


@pytest.fixture(autouse=True)
def isolated_config(
    tmp_path: Path, monkeypatch: pytest.MonkeyPatch
) -> Iterator[config_module.Config]:
    """Point the configuration at a temporary directory and drop env overrides."""
    config_dir = tmp_path / "config"
    monkeypatch.setattr(config_module.Config, "CONFIG_DIR", config_dir)
    monkeypatch.setattr(config_module.Config, "CONFIG_FILE", config_dir / "config.json")
    for name in ENV_OVERRIDES:
        monkeypatch.delenv(name, raising=False)

    config_module._config = None
    logger_module.Logger._instance = None
    logger_module._logger_instance = None

    yield config_module.get_config()

    config_module._config = None
    logger_module.Logger._instance = None
    logger_module._logger_instance = None


@pytest.fixture
def small_hypergraph() -> Hypergraph:
    """3-uniform, 5 vertices, edges 012 013 023 123 014 (colex ranks 0..4)."""
    return Hypergraph.build(
        5, 3, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3), (0, 1, 4)]
    )
