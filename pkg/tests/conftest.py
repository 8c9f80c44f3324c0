import numpy as np
import pytest

from omegaorth import backend_name

SEED = 20240810


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


def pytest_report_header(config):
    return f"omegaorth kernel backend: {backend_name()}"


def complex_gaussian(rng, n):
    return (rng.standard_normal((n, n))
            + 1j * rng.standard_normal((n, n))) / np.sqrt(2.0)
