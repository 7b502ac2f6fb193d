"""
Pytest fixtures for the Grover simulator tests.
"""

import json
from pathlib import Path

import numpy as np
import pytest
from httpx import AsyncClient, ASGITransport

from src.config import get_settings
from src.core.qstate import uniform_state
from src.logging.sim_logger import get_sim_logger
from src.main import app


DATA_DIR = Path(__file__).parent.parent / "data"


@pytest.fixture(autouse=True)
def reset_singletons():
    """Reset singleton state between tests for isolation."""
    get_settings.cache_clear()
    get_sim_logger.cache_clear()
    yield
    get_settings.cache_clear()
    get_sim_logger.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so property failures are reproducible."""
    return np.random.Generator(np.random.PCG64(20240611))


@pytest.fixture
def uniform3():
    """Equal superposition over 3 qubits."""
    return uniform_state(3)


@pytest.fixture
def uniform2():
    return uniform_state(2)


def load_corpus(name: str):
    with open(DATA_DIR / name) as f:
        return json.load(f)


@pytest.fixture
def worked_states() -> dict:
    return load_corpus("worked_states.json")


@pytest.fixture
async def client() -> AsyncClient:
    """Async HTTP client for testing."""
    transport = ASGITransport(app=app)
    async with AsyncClient(transport=transport, base_url="http://test") as ac:
        yield ac
