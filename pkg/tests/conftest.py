import numpy as np
import pytest

from core.ring import get_ring
from services.codes import kerdock, octacode, preparata


@pytest.fixture(scope="session")
def ring3():
    return get_ring(3)


@pytest.fixture(scope="session")
def ring5():
    return get_ring(5)


@pytest.fixture(scope="session")
def octa():
    return octacode()


@pytest.fixture(scope="session")
def k3():
    return kerdock(3)


@pytest.fixture(scope="session")
def p3():
    return preparata(3)


@pytest.fixture
def rng():
    return np.random.default_rng(2024)
