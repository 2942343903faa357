import pytest

from powerideals.harness.fileformat import load_builtin
from powerideals.harness.pencil import PencilConfig, build_pencil_arrangement


@pytest.fixture
def prop1():
    return load_builtin("prop1")


@pytest.fixture
def u23():
    return load_builtin("u23")


@pytest.fixture(scope="session")
def pencil():
    return build_pencil_arrangement(PencilConfig.generic_pencils(3, 1))
