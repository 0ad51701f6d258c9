import pytest

from desguard.demo import ERASE, PLANT, PMAP, SCRAMBLE, SPEC, SWAP, demo_problem


def w(text):
    """Word from a string of single-character event names."""
    return tuple(text)


def outs(strings):
    """Set of output words from strings of single-character symbols."""
    return {tuple(s) for s in strings}


@pytest.fixture
def demo():
    return demo_problem()


@pytest.fixture
def plant():
    return PLANT


@pytest.fixture
def spec():
    return SPEC


@pytest.fixture
def pmap():
    return PMAP


@pytest.fixture
def scramble():
    return SCRAMBLE


@pytest.fixture
def swap():
    return SWAP


@pytest.fixture
def erase():
    return ERASE
