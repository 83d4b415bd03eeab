import random

import pytest

from partialcds.errors import Infeasible
from partialcds.graph import from_edge_list, iter_connected_masks, mask_members
from partialcds.qst import qst_exact, qst_heuristic, qst_solve

from conftest import path


def random_graph(rng, n, prob):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < prob])


def brute_min_size(g, p, quota):
    sizes = [m.bit_count() for m in iter_connected_masks(g) if sum(p[v] for v in mask_members(m)) >= quota]
    return min(sizes) if sizes else None


def test_zero_quota(p3):
    t = qst_exact(p3, [0, 0, 0], 0)
    assert t.vertices == {0} and t.cost == 0


def test_forced_path(p3):
    t = qst_exact(p3, [1, 0, 1], 2)
    assert t.vertices == {0, 1, 2} and t.cost == 2
    t.validate(p3)


def test_single_vertex_meets_quota():
    g = path(5)
    for solver in (qst_exact, qst_heuristic):
        t = solver(g, [0, 1, 0, 7, 0], 6)
        assert t.vertices == {3} and t.cost == 0


def test_infeasible_across_components():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    for solver in (qst_exact, qst_heuristic):
        with pytest.raises(Infeasible):
            solver(g, [2, 2, 2, 2], 5)


def test_bad_inputs(p3):
    with pytest.raises(ValueError):
        qst_exact(p3, [1, 1], 1)
    with pytest.raises(ValueError):
        qst_exact(p3, [1, -1, 1], 1)


def test_lexicographic_tie_break():
    # 0-1-2-3-0 cycle, any adjacent pair reaches the quota
    g = from_edge_list(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert qst_exact(g, [1, 1, 1, 1], 2).vertices == {0, 1}


def test_exact_matches_brute_force():
    rng = random.Random(11)
    for _ in range(60):
        n = rng.randint(2, 10)
        g = random_graph(rng, n, 0.3)
        p = [rng.randint(0, 9) for _ in range(n)]
        quota = rng.randint(1, max(1, sum(p)))
        want = brute_min_size(g, p, quota)
        if want is None:
            with pytest.raises(Infeasible):
                qst_exact(g, p, quota)
            continue
        t = qst_exact(g, p, quota)
        t.validate(g)
        assert t.size == want and t.profit(p) >= quota


def test_heuristic_feasible_and_not_better():
    rng = random.Random(3)
    for _ in range(40):
        n = 12
        g = random_graph(rng, n, 0.3)
        p = [rng.randint(0, 9) for _ in range(n)]
        quota = sum(p) // 2
        try:
            exact = qst_exact(g, p, quota)
        except Infeasible:
            continue
        heur = qst_heuristic(g, p, quota)
        heur.validate(g)
        assert heur.profit(p) >= quota and heur.cost >= exact.cost


def test_dispatch():
    rng = random.Random(0)
    small = path(10)
    big = path(100)
    assert qst_solve(small, [1] * 10, 3).engine == "exact"
    assert qst_solve(big, [1] * 100, 3).engine == "heuristic"
    p = [rng.randint(0, 5) for _ in range(10)]
    assert qst_solve(small, p, 8, "exact").cost == qst_exact(small, p, 8).cost
    with pytest.raises(ValueError):
        qst_solve(small, p, 8, "fast")
