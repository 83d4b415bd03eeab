"""End-to-end solvers: greedy profit labels, then a quota Steiner tree over
those labels, then (for budgeted problems) the best k-vertex subtree.

Every returned Solution has its objective recomputed from the profit
function, never taken from the labels.
"""
from __future__ import annotations

import math
from typing import Callable, Sequence

from .errors import Infeasible, InfeasibleQuota
from .graph import Graph, components
from .labeling import Labeling, generalized_greedy, greedy_dominating_set
from .profits import ProfitFn, domination_count
from .qst import EXACT_LIMIT, VertexTree, qst_solve, tree_on
from .solution import Solution, make_solution
from .trees import RootedTree, best_k_subtree

COVER_FRACTION = 1 - 1 / math.e


def resolve_mode(g: Graph, mode: str) -> str:
    if mode == "auto":
        return "exact" if g.n <= EXACT_LIMIT else "heuristic"
    if mode not in ("exact", "heuristic"):
        raise ValueError(f"unknown mode {mode!r}")
    return mode


def guess_quota(guess: int) -> int:
    return math.ceil(COVER_FRACTION * guess)


def _single_vertex(g: Graph, f: ProfitFn, **meta) -> Solution:
    return make_solution(g, [0], f, tree_on(g, [0]), **meta)


def _quota_pipeline(g: Graph, f: ProfitFn, labels: Labeling, quota: int, mode: str, problem: str) -> Solution:
    engine = resolve_mode(g, mode)
    if quota <= 0:
        return _single_vertex(g, f, problem=problem, mode=mode, quota=quota, engine=engine)
    try:
        tree = qst_solve(g, labels.profit, quota, engine)
    except Infeasible as exc:
        raise InfeasibleQuota(str(exc)) from exc
    return make_solution(g, tree.vertices, f, tree, problem=problem, mode=mode, quota=quota, engine=tree.engine)


def solve_pcds(g: Graph, quota_nprime: int, mode: str = "auto") -> Solution:
    """Connected set dominating at least quota_nprime vertices."""
    if quota_nprime < 0:
        raise ValueError("quota must be nonnegative")
    if quota_nprime > g.n:
        raise InfeasibleQuota(f"quota {quota_nprime} exceeds n = {g.n}")
    return _quota_pipeline(g, domination_count(g), greedy_dominating_set(g), quota_nprime, mode, "pcds")


def solve_pgcds(g: Graph, f: ProfitFn, q: int, mode: str = "auto") -> Solution:
    """Connected set with f >= q."""
    if q < 0:
        raise ValueError("quota must be nonnegative")
    if q > f.total():
        raise InfeasibleQuota(f"quota {q} exceeds f(V) = {f.total()}")
    return _quota_pipeline(g, f, generalized_greedy(g, f), q, mode, "pgcds")


def _budgeted(g: Graph, f: ProfitFn, labels: Labeling, k: int, guesses: Callable[[int], Sequence[int]],
              mode: str, search: str, problem: str) -> Solution:
    engine = resolve_mode(g, mode)
    k = min(k, g.n)
    comps = components(g)
    best = None
    for comp in comps:
        if len(comps) == 1:
            profit = labels.profit
        else:
            inside = set(comp)
            profit = tuple(x if v in inside else 0 for v, x in enumerate(labels.profit))
        found = _scan_guesses(g, profit, k, guesses(sum(profit)), engine, search)
        if found is None:
            continue
        guess, tree = found
        rooted = RootedTree.from_edges(tree.vertices, tree.edges, tree.root,
                                       {v: profit[v] for v in tree.vertices})
        sub = best_k_subtree(rooted, k)
        sol = make_solution(
            g, sub.vertices, f, tree_on(g, sub.vertices, tree.engine),
            problem=problem, mode=mode, budget=k, opt_guess=guess, quota=guess_quota(guess),
            engine=tree.engine, qst_size=tree.size)
        if best is None or (sol.objective, -sol.size) > (best.objective, -best.size):
            best = sol
    if best is None:
        return _single_vertex(g, f, problem=problem, mode=mode, budget=k, engine=engine)
    return best


def _scan_guesses(g, profit, k, guesses, engine, search):
    """Find the first acceptable guess in `guesses` (ordered high to low).

    A guess is acceptable when a tree with label profit >= its quota exists
    and has at most 6k vertices. If no guess qualifies the smallest feasible
    tree seen is returned, so the caller still gets a valid answer.
    """
    memo: dict[int, VertexTree | None] = {}

    def attempt(guess):
        quota = guess_quota(guess)
        if quota not in memo:
            try:
                memo[quota] = qst_solve(g, profit, quota, engine)
            except Infeasible:
                memo[quota] = None
        return memo[quota]

    def accepted(guess):
        tree = attempt(guess)
        return tree is not None and tree.size <= 6 * k

    if not guesses:
        return None
    if search == "binary":
        # assumes acceptance is monotone: accepted(g) implies accepted(g') for g' < g
        lo, hi = 0, len(guesses) - 1
        if accepted(guesses[hi]):
            while lo < hi:
                mid = (lo + hi) // 2
                if accepted(guesses[mid]):
                    hi = mid
                else:
                    lo = mid + 1
            return guesses[lo], attempt(guesses[lo])
    elif search == "linear":
        for guess in guesses:
            if accepted(guess):
                return guess, attempt(guess)
    else:
        raise ValueError(f"unknown search {search!r}")
    feasible = [(t.size, q) for q, t in memo.items() if t is not None]
    if not feasible:
        return None
    quota = min(feasible)[1]
    guess = next(x for x in guesses if guess_quota(x) == quota)
    return guess, memo[quota]


def solve_bcds(g: Graph, k: int, mode: str = "auto", search: str = "linear") -> Solution:
    """At most k connected vertices dominating as many vertices as possible.

    The optimum coverage is guessed from n down to k (then below k, which
    only matters when no component has k vertices).
    """
    if k < 1:
        raise ValueError("budget must be at least 1")
    kk = min(k, g.n)

    def guesses(total):
        top = min(total, g.n)
        return list(range(top, kk - 1, -1)) + list(range(min(kk - 1, top), 0, -1))

    return _budgeted(g, domination_count(g), greedy_dominating_set(g), k, guesses, mode, search, "bcds")


def solve_bgcds(g: Graph, f: ProfitFn, k: int, mode: str = "auto", search: str = "linear") -> Solution:
    """At most k connected vertices maximizing f.

    Guesses run from f(V) down to 0; in heuristic mode they step by
    f(V) // n to bound the number of tree computations.
    """
    if k < 1:
        raise ValueError("budget must be at least 1")
    labels = generalized_greedy(g, f)
    step = 1 if resolve_mode(g, mode) == "exact" else max(1, f.total() // g.n)

    def guesses(total):
        return list(range(total, -1, -step))

    return _budgeted(g, f, labels, k, guesses, mode, search, "bgcds")


def lookahead_greedy_bcds(g: Graph, k: int, c: int, tie_break: str = "smallest") -> Solution:
    """Connected greedy with c-step look-ahead (baseline without guarantee).

    Start at a vertex of largest closed neighborhood, then repeatedly append
    the path of at most c new vertices (first vertex adjacent to the current
    set) that dominates the most new vertices. Ties go to shorter paths, then
    to the lexicographically smallest path, or the largest one with
    tie_break="largest". Stops early once no path gains anything.
    """
    if k < 1 or c < 1:
        raise ValueError("budget and look-ahead depth must be at least 1")
    if tie_break not in ("smallest", "largest"):
        raise ValueError(f"unknown tie_break {tie_break!r}")
    sign = 1 if tie_break == "smallest" else -1
    k = min(k, g.n)
    closed = g.closed_masks
    adj = g.adj_masks
    start = max(range(g.n), key=lambda v: (closed[v].bit_count(), -sign * v))
    chosen = 1 << start
    dominated = closed[start]
    size = 1
    while size < k:
        depth = min(c, k - size)
        frontier = 0
        for v in _bits(chosen):
            frontier |= adj[v]
        frontier &= ~chosen
        best_key, best_path = None, None
        for path, cover in _paths(frontier, adj, closed, chosen, depth):
            gain = (cover & ~dominated).bit_count()
            key = (gain, -len(path), tuple(-sign * x for x in path))
            if best_key is None or key > best_key:
                best_key, best_path = key, path
        if best_path is None or best_key[0] == 0:
            break
        for v in best_path:
            chosen |= 1 << v
            dominated |= closed[v]
        size += len(best_path)
    f = domination_count(g)
    return make_solution(g, _bits(chosen), f, problem="lookahead-bcds", budget=k, depth=c, engine="lookahead")


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _paths(frontier, adj, closed, chosen, depth):
    """Simple paths of 1..depth vertices outside `chosen`, starting in `frontier`."""
    stack = [((u,), 1 << u, closed[u]) for u in reversed(_bits(frontier))]
    while stack:
        path, used, cover = stack.pop()
        yield path, cover
        if len(path) < depth:
            nxt = adj[path[-1]] & ~used & ~chosen
            for u in reversed(_bits(nxt)):
                stack.append((path + (u,), used | (1 << u), cover | closed[u]))
