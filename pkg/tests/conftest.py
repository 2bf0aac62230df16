"""Shared fixtures for the ceheis test suite."""
from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from core import config
from fock.space import FockSpace, TwoModeSpace

GOLDEN_DIR = Path(__file__).parent / "golden"


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(config.DEFAULT_SEED)


@pytest.fixture(scope="session")
def space() -> FockSpace:
    return FockSpace(config.DEFAULT_DIM)


@pytest.fixture(scope="session")
def splitting_space() -> FockSpace:
    return FockSpace(config.SPLITTING_DIM)


@pytest.fixture(scope="session")
def two_mode_space() -> TwoModeSpace:
    return TwoModeSpace(config.TWO_MODE_DIM)


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
