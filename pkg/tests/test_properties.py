import math

from hypothesis import given, settings, strategies as st

from partialcds.errors import Infeasible, InfeasibleQuota
from partialcds.graph import from_edge_list, is_connected_induced, iter_connected_masks, mask_members
from partialcds.instances import Instance, parse_instance, serialize_instance
from partialcds.labeling import generalized_greedy, greedy_dominating_set
from partialcds.oracles import opt_pcds
from partialcds.pipelines import solve_bcds, solve_bgcds, solve_pcds
from partialcds.profits import capacitated_domination, check_special_submodular, weighted_domination
from partialcds.qst import qst_exact
from partialcds.trees import RootedTree, best_k_subtree, brute_best_subtree, jordan_split


@st.composite
def graphs(draw, lo=1, hi=9):
    n = draw(st.integers(lo, hi))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edge_list(n, [e for e, k in zip(pairs, keep) if k])


@st.composite
def trees(draw, lo=1, hi=13):
    n = draw(st.integers(lo, hi))
    parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
    profit = draw(st.lists(st.integers(0, 9), min_size=n, max_size=n))
    root = draw(st.integers(0, n - 1))
    return RootedTree.from_edges(range(n), [(i, p) for i, p in zip(range(1, n), parents)], root,
                                 dict(enumerate(profit)))


def vec(n, lo=0, hi=9):
    return st.lists(st.integers(lo, hi), min_size=n, max_size=n)


@given(graphs(hi=12))
def test_greedy_cover_sets_partition(g):
    lab = greedy_dominating_set(g)
    assert lab.total() == g.n
    seen = set()
    for v in lab.order:
        assert not seen & lab.cover_sets[v]
        seen |= lab.cover_sets[v]
    assert seen == set(range(g.n))


@given(st.data())
def test_generalized_labels_are_marginals(data):
    g = data.draw(graphs())
    f = weighted_domination(g, data.draw(vec(g.n)))
    lab = generalized_greedy(g, f)
    picked = []
    for v in lab.order:
        assert lab.profit[v] == f.marginal(picked, v) > 0
        picked.append(v)
    assert lab.total() == f.total()


@given(st.data())
def test_label_sum_lower_bounds_domination(data):
    g = data.draw(graphs())
    lab = greedy_dominating_set(g)
    for mask in iter_connected_masks(g, 4):
        s = mask_members(mask)
        covered = set().union(*({v, *g.adjacency[v]} for v in s))
        assert sum(lab.profit[v] for v in s) <= len(covered)


@settings(max_examples=60)
@given(st.data())
def test_qst_exact_is_minimum(data):
    g = data.draw(graphs(hi=8))
    p = data.draw(vec(g.n))
    quota = data.draw(st.integers(0, sum(p) + 1))
    sizes = [m.bit_count() for m in iter_connected_masks(g) if sum(p[v] for v in mask_members(m)) >= quota]
    try:
        t = qst_exact(g, p, quota)
    except Infeasible:
        assert not sizes and quota > 0
        return
    t.validate(g)
    assert t.profit(p) >= quota
    if quota > 0:
        assert t.size == min(sizes)


@given(trees(), st.integers(1, 14))
def test_best_k_subtree_is_optimal(t, k):
    fast = best_k_subtree(t, k)
    assert fast.size <= k
    assert fast.total_profit() == brute_best_subtree(t, k).total_profit()


@given(trees(lo=2, hi=30))
def test_jordan_split_bounds(t):
    a, b = jordan_split(t)
    n = t.size
    assert a.size <= math.ceil(n / 2) and b.size <= math.ceil(2 * n / 3)
    assert set(a.vertices) | set(b.vertices) == set(t.vertices)


@settings(max_examples=50)
@given(st.data())
def test_pcds_meets_quota_and_bound(data):
    g = data.draw(graphs(lo=2, hi=10))
    quota = data.draw(st.integers(1, g.n))
    try:
        sol = solve_pcds(g, quota)
    except InfeasibleQuota:
        return
    opt = opt_pcds(g, quota)
    assert is_connected_induced(g, sol.chosen) and sol.objective >= quota
    delta = max(max(len(a) for a in g.adjacency), 1)
    assert sol.size <= 2 * opt.size * math.log(delta) + opt.size + 2


@settings(max_examples=50)
@given(st.data())
def test_budgeted_solutions_respect_budget(data):
    g = data.draw(graphs(lo=1, hi=10))
    k = data.draw(st.integers(1, 5))
    caps = data.draw(vec(g.n, 1, 3))
    for sol in (solve_bcds(g, k), solve_bgcds(g, capacitated_domination(g, caps), k)):
        assert 1 <= sol.size <= k and is_connected_induced(g, sol.chosen)
        sol.tree.validate(g)


@settings(max_examples=30)
@given(st.data())
def test_capacitated_claim_is_special_submodular(data):
    g = data.draw(graphs(hi=6))
    f = capacitated_domination(g, data.draw(vec(g.n, 0, 3)))
    assert check_special_submodular(f, g).ok


@given(st.data())
def test_instance_round_trip(data):
    g = data.draw(graphs(hi=12))
    w = data.draw(st.none() | vec(g.n))
    c = data.draw(st.none() | vec(g.n, 0, 5))
    label = data.draw(st.sampled_from(["", "x", "gnp-n5-p0.2-s3"]))
    inst = Instance(g, None if w is None else tuple(w), None if c is None else tuple(c), label)
    text = serialize_instance(inst)
    assert parse_instance(text) == inst
    assert serialize_instance(parse_instance(text)) == text
