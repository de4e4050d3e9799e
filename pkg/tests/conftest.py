import pytest

from mdscensus import enumerate_involutory4_mds, make_field


@pytest.fixture(scope="session")
def f2():
    return make_field(2)


@pytest.fixture(scope="session")
def f3():
    return make_field(3)


@pytest.fixture(scope="session")
def f4():
    return make_field(4)


@pytest.fixture(scope="session")
def f5():
    return make_field(5)


@pytest.fixture(scope="session")
def f8():
    return make_field(8)


@pytest.fixture(scope="session")
def inv4_gf8(f3):
    """All 4x4 involutory MDS matrices over GF(2^3)."""
    return enumerate_involutory4_mds(f3)
