import pytest

from supergaudin import ParitySequence, distinguished_parities
from supergaudin.reps import defining_module, realize_module


@pytest.fixture(scope="session")
def ps11():
    return distinguished_parities(1, 1)


@pytest.fixture(scope="session")
def ps21():
    return ParitySequence((0, 1, 0))


@pytest.fixture(scope="session")
def ps21d():
    return ParitySequence((0, 0, 1))


@pytest.fixture(scope="session")
def ps12():
    return ParitySequence((0, 1, 1))


@pytest.fixture(scope="session")
def module_cache():
    cache = {}

    def get(mu, ps):
        key = (tuple(mu), ps.parities)
        if key not in cache:
            cache[key] = realize_module(mu, ps)
        return cache[key]

    return get


@pytest.fixture(scope="session")
def box21(ps21):
    return defining_module(ps21)


@pytest.fixture(scope="session")
def box11(ps11):
    return defining_module(ps11)
