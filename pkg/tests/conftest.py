import pytest

from permclass.groupexpr import group_from_text
from permclass.replay import ReplayContext


@pytest.fixture(scope="session")
def a6():
    return group_from_text("A6")


@pytest.fixture(scope="session")
def s6():
    return group_from_text("S6")


@pytest.fixture(scope="session")
def a6xa6():
    return group_from_text("A6 x A6")


@pytest.fixture(scope="session")
def u42():
    return group_from_text("U4(2)")


@pytest.fixture(scope="session")
def ctx():
    return ReplayContext()
