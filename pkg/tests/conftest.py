import pytest

from partialcds.graph import from_edge_list


def star(leaves):
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def path(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def p3():
    return path(3)


@pytest.fixture
def k14():
    return star(4)


@pytest.fixture(autouse=True)
def _no_disk_cache(monkeypatch):
    # unit tests should not touch a user's oracle cache
    monkeypatch.delenv("PARTIALCDS_ORACLE_CACHE", raising=False)
