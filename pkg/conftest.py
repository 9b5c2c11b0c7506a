import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

SEED = 20240611


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-order catalog runs")


@pytest.fixture
def rng():
    return random.Random(SEED)
