import pytest

from quandles.catalog_io import paper_table
from quandles.enumeration import enumerate_connected


@pytest.fixture(scope="session")
def q61():
    return paper_table("q61")


@pytest.fixture(scope="session")
def q72():
    return paper_table("q72")


@pytest.fixture(scope="session")
def q52():
    return paper_table("q52")


@pytest.fixture(scope="session")
def q53():
    return paper_table("q53")


@pytest.fixture(scope="session")
def catalog_n7():
    """Enumerated connected quandles for every order up to 7."""
    return {n: enumerate_connected(n) for n in range(1, 8)}


@pytest.fixture(scope="session")
def catalog_n8(catalog_n7):
    catalog = dict(catalog_n7)
    catalog[8] = enumerate_connected(8)
    return catalog
