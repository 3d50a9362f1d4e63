import pytest

from regdecomp import make_field


@pytest.fixture(scope="session")
def gf5():
    return make_field(5, 1)


@pytest.fixture(scope="session")
def gf3():
    return make_field(3, 1)


@pytest.fixture(scope="session")
def gf25():
    return make_field(5, 2)


@pytest.fixture(scope="session")
def gf81():
    return make_field(3, 4)
