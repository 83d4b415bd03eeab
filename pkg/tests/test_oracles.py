import random
import struct

import pytest

from partialcds.errors import Infeasible, TooLarge
from partialcds.graph import from_edge_list
from partialcds.oracles import enumerate_connected_subsets, opt_bcds, opt_bgcds, opt_pcds, opt_pgcds
from partialcds.profits import domination_count, weighted_domination

from conftest import path


def random_graph(rng, n, prob):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob])


def test_enumerate_p3(p3):
    got = list(enumerate_connected_subsets(p3, 2))
    assert got == [{0}, {1}, {2}, {0, 1}, {1, 2}]


def test_enumerate_edgeless():
    assert list(enumerate_connected_subsets(from_edge_list(3, []), 3)) == [{0}, {1}, {2}]


def test_enumerate_k4():
    k4 = from_edge_list(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert len(list(enumerate_connected_subsets(k4, 4))) == 15


def test_enumerate_guard():
    with pytest.raises(TooLarge):
        list(enumerate_connected_subsets(path(21), 2))


def test_oracle_guard():
    with pytest.raises(TooLarge):
        opt_pcds(path(15), 3)


def test_star_examples(k14):
    assert opt_pcds(k14, 5).size == 1
    assert opt_bcds(k14, 1).objective == 5


def test_unreachable_quota():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    with pytest.raises(Infeasible):
        opt_pcds(g, 3)


def test_budget_nonbinding_is_largest_component():
    g = from_edge_list(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)])
    assert opt_bcds(g, 7).objective == 4


def test_cross_validation_and_monotonicity():
    rng = random.Random(21)
    for _ in range(100):
        n = rng.randint(2, 9)
        g = random_graph(rng, n, 0.4)
        f = domination_count(g)
        prev = 0
        for k in range(1, n + 1):
            a, b = opt_bcds(g, k), opt_bgcds(g, f, k)
            assert a.objective == b.objective and a.chosen == b.chosen
            assert a.objective >= prev and a.size <= k
            prev = a.objective
        prev = 0
        for q in range(1, n + 1):
            try:
                s = opt_pcds(g, q)
            except Infeasible:
                break
            assert s.size >= prev and s.objective >= q
            prev = s.size


def test_weighted_oracle_small():
    g = path(4)
    f = weighted_domination(g, (0, 5, 0, 9))
    assert opt_bgcds(g, f, 1).chosen == {2}
    assert opt_pgcds(g, f, 14).chosen == {2}
    assert opt_pgcds(g, f, 0).size == 0


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("PARTIALCDS_ORACLE_CACHE", str(tmp_path))
    g = path(6)
    first = opt_pcds(g, 6)
    files = list(tmp_path.glob("*.bin"))
    assert len(files) == 1
    data = files[0].read_bytes()
    magic, version, objective, size = struct.unpack_from("<8sHqI", data)
    assert (magic, version, objective, size) == (b"CDSORACL", 1, 6, first.size)
    assert opt_pcds(g, 6).chosen == first.chosen
    # a foreign file under the same name is ignored, not trusted
    files[0].write_bytes(b"garbage")
    assert opt_pcds(g, 6).chosen == first.chosen
