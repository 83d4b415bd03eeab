import random

import pytest

from partialcds.errors import NonmonotoneProfit
from partialcds.graph import from_edge_list
from partialcds.labeling import generalized_greedy, greedy_dominating_set
from partialcds.profits import ProfitFn, domination_count, weighted_domination

from conftest import star


class SetSize(ProfitFn):
    kind = "size"

    def _eval_mask(self, mask):
        return mask.bit_count()


class Shrinking(ProfitFn):
    kind = "shrinking"

    def _eval_mask(self, mask):
        # f({0}) = 2, f({1}) = 0, f({0, 1}) = 1
        return {0: 0, 1: 2, 2: 0, 3: 1}[mask]


def test_star(k14):
    lab = greedy_dominating_set(k14)
    assert lab.order == (0,) and lab.profit[0] == 5


def test_path(p3):
    lab = greedy_dominating_set(p3)
    assert lab.order == (1,) and lab.profit == (0, 3, 0)


def test_edgeless_ties_by_id():
    lab = greedy_dominating_set(from_edge_list(3, []))
    assert lab.order == (0, 1, 2) and lab.profit == (1, 1, 1)


def test_cover_sets_partition():
    rng = random.Random(2)
    for _ in range(30):
        n = rng.randint(1, 14)
        g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        lab = greedy_dominating_set(g)
        sets = [lab.cover_sets[v] for v in lab.order]
        assert sum(map(len, sets)) == n == lab.total()
        assert frozenset().union(*sets) == frozenset(range(n))
        assert all(lab.profit[v] == len(lab.cover_sets[v]) for v in lab.order)


def test_generalized_matches_plain(p3):
    a, b = generalized_greedy(p3, domination_count(p3)), greedy_dominating_set(p3)
    assert (a.order, a.profit) == (b.order, b.profit)


def test_generalized_set_size():
    g = from_edge_list(3, [])
    lab = generalized_greedy(g, SetSize(g))
    assert lab.order == (0, 1, 2) and lab.profit == (1, 1, 1)


def test_generalized_weighted_star():
    g = star(2)
    lab = generalized_greedy(g, weighted_domination(g, (5, 1, 1)))
    assert lab.order == (0,) and lab.profit == (7, 0, 0)


def test_labels_are_true_marginals():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 10)
        g = from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35])
        f = weighted_domination(g, [rng.randint(0, 9) for _ in range(n)])
        lab = generalized_greedy(g, f)
        picked = []
        for v in lab.order:
            assert lab.profit[v] == f.marginal(picked, v)
            picked.append(v)
        assert f.eval(picked) == f.total() == lab.total()


def test_nonmonotone_rejected():
    g = from_edge_list(2, [])
    with pytest.raises(NonmonotoneProfit):
        generalized_greedy(g, Shrinking(g))
