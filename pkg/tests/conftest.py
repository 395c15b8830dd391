import pytest

from pgembed.galois import field_make
from pgembed.plane import pg2


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="also run tests marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


@pytest.fixture(scope="session")
def fano():
    return pg2(field_make(2))


@pytest.fixture(scope="session")
def pg3():
    return pg2(field_make(3))


@pytest.fixture(scope="session")
def pg4():
    return pg2(field_make(2, 2))


@pytest.fixture(scope="session")
def pg5():
    return pg2(field_make(5))


@pytest.fixture(scope="session")
def pg7():
    return pg2(field_make(7))


@pytest.fixture(scope="session")
def pg8():
    return pg2(field_make(2, 3))


@pytest.fixture(scope="session")
def pg9():
    return pg2(field_make(3, 2))
