import numpy as np
import pytest

from config.logging_config import setup_logging
from src.core.data_models import Alphabet

from tests.strings import random_pair


@pytest.fixture(scope="session", autouse=True)
def quiet_logging():
    setup_logging("WARNING")


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def make_pair(rng):
    def factory(m, n, alphabet=None):
        return random_pair(rng, m, n, alphabet or Alphabet.binary())
    return factory
