import pytest

from fairex.algebra import setup


@pytest.fixture
def params11():
    return setup(11)


@pytest.fixture
def params_big():
    return setup(2**31 - 1)
