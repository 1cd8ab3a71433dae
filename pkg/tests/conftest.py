import pytest

from ellisem.golden import load_bundled
from ellisem.substitution import Substitution


@pytest.fixture(scope="session")
def paper():
    return load_bundled("paper")


@pytest.fixture(scope="session")
def bijective():
    return load_bundled("bijective")


@pytest.fixture(scope="session")
def trivial():
    return Substitution(("a",), (("a", "a"),))
