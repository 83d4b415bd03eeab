"""Quota Steiner tree with unit edge costs.

Find a tree of the host graph with the fewest edges whose vertex profits sum
to at least the quota. With unit costs the cost of a tree is its vertex count
minus one, so the problem is: smallest connected vertex set reaching the
quota, returned together with a spanning tree of it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import Infeasible
from .graph import Graph, bfs_distances, components, mask_members, spanning_tree_edges

EXACT_LIMIT = 20


@dataclass(frozen=True)
class VertexTree:
    vertices: frozenset[int]
    edges: tuple[tuple[int, int], ...]
    root: int | None
    engine: str | None = None

    @property
    def cost(self) -> int:
        return len(self.edges)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def profit(self, p: Sequence[int]) -> int:
        return sum(p[v] for v in self.vertices)

    def validate(self, g: Graph) -> None:
        """Raise ValueError unless this is a spanning tree of `vertices` in g."""
        if not self.vertices:
            if self.edges:
                raise ValueError("empty tree with edges")
            return
        if len(self.edges) != len(self.vertices) - 1:
            raise ValueError("edge count is not |V| - 1")
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            if u not in self.vertices or v not in self.vertices:
                raise ValueError(f"edge ({u}, {v}) leaves the vertex set")
            if not g.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the host graph")
            ru, rv = find(u), find(v)
            if ru == rv:
                raise ValueError("edges contain a cycle")
            parent[ru] = rv


def tree_on(g: Graph, vertices, engine: str | None = None) -> VertexTree:
    vertices = frozenset(vertices)
    if not vertices:
        return VertexTree(frozenset(), (), None, engine)
    root, edges = spanning_tree_edges(g, vertices)
    return VertexTree(vertices, tuple(edges), root, engine)


def _check_inputs(g: Graph, p: Sequence[int], quota: int) -> None:
    if len(p) != g.n:
        raise ValueError(f"expected {g.n} profits, got {len(p)}")
    if any(x < 0 for x in p):
        raise ValueError("profits must be nonnegative")
    if quota < 0:
        raise ValueError("quota must be nonnegative")


def _trivial(g, p, quota, engine):
    """Handle quota 0, infeasible totals and single-vertex answers."""
    if quota == 0:
        return tree_on(g, [0], engine)
    if max(sum(p[v] for v in comp) for comp in components(g)) < quota:
        raise Infeasible(f"no connected vertex set reaches quota {quota}")
    for v in range(g.n):
        if p[v] >= quota:
            return tree_on(g, [v], engine)
    return None


def qst_exact(g: Graph, p: Sequence[int], quota: int) -> VertexTree:
    """Exact minimum-size connected set with profit >= quota.

    Iterative deepening on the set size s: for each seed vertex (the smallest
    member of the set) grow connected sets through higher-numbered vertices,
    pruning whenever the current profit plus the best (s - |S|) profits still
    reachable cannot meet the quota. The first size with a hit is optimal;
    among optimal sets the lexicographically smallest sorted vertex tuple wins.
    """
    _check_inputs(g, p, quota)
    if g.n > EXACT_LIMIT:
        raise ValueError(f"exact QST is limited to n <= {EXACT_LIMIT}")
    hit = _trivial(g, p, quota, "exact")
    if hit is not None:
        return hit

    adj = g.adj_masks
    best_tuple = None
    for size in range(2, g.n + 1):
        for seed in range(g.n):
            above = ~((1 << (seed + 1)) - 1)
            found = []
            _search(adj, p, quota, size, seed, above, found)
            if found:
                best_tuple = min(tuple(mask_members(m)) for m in found)
                break
        if best_tuple is not None:
            return tree_on(g, best_tuple, "exact")
    raise Infeasible(f"no connected vertex set reaches quota {quota}")  # pragma: no cover


def _search(adj, p, quota, size, seed, above, found):
    stack = [(1 << seed, adj[seed] & above, 0, 1, p[seed])]
    while stack:
        s, cand, forb, k, prof = stack.pop()
        if prof >= quota:
            found.append(s)
            continue
        if k == size:
            continue
        # everything still reachable through allowed vertices
        allowed = above & ~forb & ~s
        reach = cand & allowed
        frontier = reach
        while frontier:
            nxt = 0
            for v in mask_members(frontier):
                nxt |= adj[v]
            nxt &= allowed & ~reach
            reach |= nxt
            frontier = nxt
        gains = sorted((p[v] for v in mask_members(reach)), reverse=True)
        if prof + sum(gains[: size - k]) < quota:
            continue
        for u in mask_members(cand):
            bit = 1 << u
            new_cand = (cand | adj[u]) & above & ~s & ~forb & ~bit
            stack.append((s | bit, new_cand, forb, k + 1, prof + p[u]))
            forb |= bit
            cand &= ~bit


def qst_heuristic(g: Graph, p: Sequence[int], quota: int) -> VertexTree:
    """Ratio greedy: grow from the top-profit vertex, each time attaching the
    positive-profit vertex with the smallest (hop distance) / (profit) along a
    shortest path. Run inside every component whose total profit reaches the
    quota; the smallest resulting tree is returned.
    """
    _check_inputs(g, p, quota)
    hit = _trivial(g, p, quota, "heuristic")
    if hit is not None:
        return hit
    best = None
    for comp in components(g):
        if sum(p[v] for v in comp) < quota:
            continue
        tree = _grow(g, p, quota, comp)
        if best is None or (len(tree), sorted(tree)) < (len(best), sorted(best)):
            best = tree
    return tree_on(g, best, "heuristic")


def _grow(g, p, quota, comp):
    seed = max(comp, key=lambda v: (p[v], -v))
    tree = {seed}
    total = p[seed]
    while total < quota:
        dist, parent = bfs_distances(g, tree)
        target = min(
            (v for v in comp if v not in tree and p[v] > 0),
            key=lambda v: (dist[v] / p[v], dist[v], v),
        )
        v = target
        while v not in tree:
            tree.add(v)
            total += p[v]
            v = parent[v]
    return tree


def qst_solve(g: Graph, p: Sequence[int], quota: int, mode: str = "auto") -> VertexTree:
    if mode == "auto":
        mode = "exact" if g.n <= EXACT_LIMIT else "heuristic"
    if mode == "exact":
        return qst_exact(g, p, quota)
    if mode == "heuristic":
        return qst_heuristic(g, p, quota)
    raise ValueError(f"unknown QST mode {mode!r}")

