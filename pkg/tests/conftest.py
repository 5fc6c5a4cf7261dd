import pytest

from negacyclic.field import get_field
from negacyclic.ring import ModulusKind

pytest_plugins = ["pytester"]


@pytest.fixture
def F3():
    return get_field(3)


@pytest.fixture
def F5():
    return get_field(5)


@pytest.fixture
def g5(F5):
    return F5.poly((1, 1))


@pytest.fixture
def neg5():
    return ModulusKind.negacyclic(5)
