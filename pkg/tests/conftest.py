import numpy as np
import pytest

from core.parallel import WorkerPool
from core.sieve import FactorSieve

SEED = 20240917

@pytest.fixture(scope="session")
def small_sieve():
    return FactorSieve.build(10 ** 4)

@pytest.fixture(scope="session")
def sieve():
    return FactorSieve.build(10 ** 6)

@pytest.fixture
def rng():
    return np.random.default_rng(SEED)

@pytest.fixture
def pool():
    return WorkerPool(threads=1)

@pytest.fixture
def threaded_pool():
    return WorkerPool(threads=4)
