import pytest

from tribos.symbols import find_s0


@pytest.fixture(scope="session")
def s0() -> float:
    return find_s0(1e-14).s0
