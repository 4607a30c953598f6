# tests/conftest.py - Shared fixtures
import pytest

from oriented_steiner.quasigroup import steiner_quasigroup
from oriented_steiner.sts import construct_sts, orient, random_orientation


@pytest.fixture
def sts3():
    return construct_sts(3)


@pytest.fixture
def sts7():
    return construct_sts(7)


@pytest.fixture
def sts9():
    return construct_sts(9)


@pytest.fixture
def sts13():
    return construct_sts(13)


@pytest.fixture
def fano(sts7):
    return steiner_quasigroup(sts7)


@pytest.fixture
def oriented3(sts3):
    return orient(sts3, [0])


@pytest.fixture
def oriented7(sts7):
    return orient(sts7, "1010101")


@pytest.fixture
def oriented9(sts9):
    return random_orientation(sts9, seed=3)
