import pytest

from chardeg import Catalogue


@pytest.fixture(scope="session")
def cat():
    """The bundled catalogue, shared so group/table caches persist."""
    return Catalogue()
