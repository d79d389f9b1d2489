import pytest

from src.core.instance import disjoint_union
from tests.helpers import latin3, load_fixture


@pytest.fixture
def g_right():
    return load_fixture('G-right')


@pytest.fixture
def g_left():
    return load_fixture('G-left')


@pytest.fixture
def k22():
    return load_fixture('K22')


@pytest.fixture
def k22_pair(k22):
    """Duas cópias disjuntas de K22 (ids prefixados por "1." e "2.")."""
    return disjoint_union([k22, k22])


@pytest.fixture
def cyclic3():
    return latin3()
