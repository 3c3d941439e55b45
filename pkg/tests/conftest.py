import pytest

from shfc.rings import Ring


@pytest.fixture(scope="session")
def ring_p1():
    return Ring(32003, 2)


@pytest.fixture(scope="session")
def ring_p2():
    return Ring(32003, 3)


@pytest.fixture(scope="session")
def ring_p3():
    return Ring(32003, 4)


@pytest.fixture(scope="session")
def ring_q2():
    return Ring(0, 3)
