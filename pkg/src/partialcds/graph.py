"""Undirected simple graphs on vertices 0..n-1.

Vertex sets are passed around as plain Python sets/frozensets at the API
boundary; internally several routines use int bitmasks (bit v set <=> v in S)
because subset enumeration over n <= 20 vertices is the hot path.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InvalidVertex, SelfLoopRejected, Unreachable


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> list[tuple[int, int]]:
        """Sorted edge list with u < v."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj_masks[u] >> v & 1)

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << u for u in nb) for nb in self.adjacency)

    @cached_property
    def closed_masks(self) -> tuple[int, ...]:
        return tuple(m | (1 << v) for v, m in enumerate(self.adj_masks))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InvalidVertex(f"vertex {v} out of range [0, {self.n})")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise ValueError("graph needs at least one vertex")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        u, v = int(u), int(v)
        for x in (u, v):
            if not 0 <= x < n:
                raise InvalidVertex(f"vertex {x} out of range [0, {n})")
        if u == v:
            raise SelfLoopRejected(f"self-loop at vertex {u}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g._check(v)
    return frozenset(g.adjacency[v]) | {v}


def max_degree(g: Graph) -> int:
    return max((len(a) for a in g.adjacency), default=0)


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def mask_members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def closed_neighborhood_mask(g: Graph, mask: int) -> int:
    cover = 0
    for v in mask_members(mask):
        cover |= g.closed_masks[v]
    return cover


def is_connected_mask(g: Graph, mask: int) -> bool:
    if mask & (mask - 1) == 0:
        return True
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in mask_members(frontier):
            nxt |= g.adj_masks[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def is_connected_induced(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    for v in s:
        g._check(v)
    return is_connected_mask(g, to_mask(s))


def components(g: Graph) -> list[list[int]]:
    """Connected components, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    queue.append(u)
        comps.append(sorted(comp))
    return comps


def bfs_distances(g: Graph, sources: Iterable[int]) -> tuple[list[int], list[int]]:
    """Multi-source BFS. Returns (dist, parent); unreachable vertices get -1.

    Sources are expanded in ascending id order and neighbors are scanned in
    sorted order, so parents prefer smaller ids.
    """
    dist = [-1] * g.n
    parent = [-1] * g.n
    queue = deque()
    for s in sorted(set(sources)):
        dist[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                parent[u] = v
                queue.append(u)
    return dist, parent


def shortest_path(g: Graph, src: int, dst: int) -> list[int]:
    g._check(src)
    g._check(dst)
    if src == dst:
        return [src]
    # search backwards from dst so that walking parents from src yields a
    # path whose every next hop is the smallest-id neighbor on a geodesic
    dist, parent = bfs_distances(g, [dst])
    if dist[src] < 0:
        raise Unreachable(f"no path from {src} to {dst}")
    path = [src]
    v = src
    while v != dst:
        v = min(u for u in g.adjacency[v] if dist[u] == dist[v] - 1)
        path.append(v)
    return path


def spanning_tree_edges(g: Graph, vertices: Iterable[int]) -> tuple[int, list[tuple[int, int]]]:
    """BFS spanning tree of the subgraph induced by `vertices`.

    Rooted at the smallest vertex. Raises ValueError if the set is not
    connected or empty.
    """
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("empty vertex set")
    inside = set(vs)
    root = vs[0]
    seen = {root}
    edges = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if u in inside and u not in seen:
                seen.add(u)
                edges.append((v, u))
                queue.append(u)
    if len(seen) != len(inside):
        raise ValueError("vertex set does not induce a connected subgraph")
    return root, edges


def iter_connected_masks(g: Graph, max_size: int | None = None, seeds: Iterable[int] | None = None) -> Iterator[int]:
    """Yield every connected vertex subset (as a bitmask) exactly once.

    Each set is generated from its smallest vertex (the seed) and only grows
    through higher-numbered vertices. Within one seed, a candidate that has
    been branched on is forbidden in later sibling branches, which rules out
    duplicates.
    """
    if max_size is None:
        max_size = g.n
    if max_size < 1:
        return
    adj = g.adj_masks
    seed_list = range(g.n) if seeds is None else sorted(seeds)
    for seed in seed_list:
        above = ~((1 << (seed + 1)) - 1)
        stack = [(1 << seed, adj[seed] & above, 0, 1)]
        while stack:
            s, cand, forb, size = stack.pop()
            yield s
            if size == max_size:
                continue
            for u in mask_members(cand):
                bit = 1 << u
                new_cand = (cand | adj[u]) & above & ~s & ~forb & ~bit
                stack.append((s | bit, new_cand, forb, size + 1))
                forb |= bit
                cand &= ~bit
