import random

import pytest

from src.chevalley import get_engine
from src.config import settings
from src.lattices import get_lattice
from src.rootsystem import build_root_system


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: matrix checks over additional primes and full reports")


@pytest.fixture(scope="session")
def rs():
    return build_root_system("E7")


@pytest.fixture(scope="session")
def lattice():
    return get_lattice("E7")


@pytest.fixture(scope="session")
def engine17():
    return get_engine(17)


@pytest.fixture(scope="session")
def basis(engine17):
    return engine17.basis


@pytest.fixture
def rng():
    return random.Random(settings.sample_seed)
