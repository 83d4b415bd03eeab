"""Rooted trees with vertex profits: balanced splitting, decomposition into
budget-sized pieces, and the best connected subtree under a size budget.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import BudgetTooSmall, TooLarge, TooSmall


K_MIN = 3
BRUTE_LIMIT = 18


@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: Mapping[int, int | None]
    children: Mapping[int, tuple[int, ...]]
    profit: Mapping[int, int]

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[tuple[int, int]], root: int,
                   profit: Mapping[int, int] | None = None) -> "RootedTree":
        vertices = set(vertices)
        if root not in vertices:
            raise ValueError(f"root {root} not among the vertices")
        nbrs: dict[int, list[int]] = {v: [] for v in vertices}
        for u, v in edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        parent: dict[int, int | None] = {root: None}
        children: dict[int, tuple[int, ...]] = {}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            kids = sorted(u for u in nbrs[v] if u != parent[v])
            for u in kids:
                if u in parent:
                    raise ValueError("edges contain a cycle")
                parent[u] = v
                queue.append(u)
            children[v] = tuple(kids)
        if len(parent) != len(vertices):
            raise ValueError("edges do not connect all vertices")
        if profit is None:
            profit = {}
        return cls(root, parent, children, {v: int(profit.get(v, 0)) for v in vertices})

    @property
    def vertices(self) -> list[int]:
        return sorted(self.parent)

    @property
    def size(self) -> int:
        return len(self.parent)

    def __len__(self):
        return len(self.parent)

    def edges(self) -> list[tuple[int, int]]:
        return [(p, v) for v, p in self.parent.items() if p is not None]

    def total_profit(self) -> int:
        return sum(self.profit.values())

    def preorder(self) -> list[int]:
        out, stack = [], [self.root]
        while stack:
            v = stack.pop()
            out.append(v)
            stack.extend(reversed(self.children[v]))
        return out

    def depth(self) -> dict[int, int]:
        d = {self.root: 0}
        for v in self.preorder():
            for c in self.children[v]:
                d[c] = d[v] + 1
        return d

    def induced(self, vertices: Iterable[int], root: int | None = None) -> "RootedTree":
        """Subtree on a connected vertex subset, rooted at its shallowest vertex by default."""
        vs = set(vertices)
        if root is None:
            depth = self.depth()
            root = min(vs, key=lambda v: (depth[v], v))
        edges = [(p, v) for v, p in self.parent.items() if p is not None and v in vs and p in vs]
        return RootedTree.from_edges(vs, edges, root, {v: self.profit[v] for v in vs})

    def rerooted(self, root: int) -> "RootedTree":
        return RootedTree.from_edges(self.parent, self.edges(), root, self.profit)


def _subtree_sizes(t: RootedTree) -> dict[int, int]:
    size = {}
    for v in reversed(t.preorder()):
        size[v] = 1 + sum(size[c] for c in t.children[v])
    return size


def jordan_split(t: RootedTree) -> tuple[RootedTree, RootedTree]:
    """Split t into two subtrees sharing one vertex c.

    c is a centroid (found by walking from the root into any child subtree
    holding more than half the vertices). The components of t - c are dealt
    into the first part, largest first, until it holds at least (n-1)/3 of
    them; the rest form the second part. Both parts are rooted at c and
    returned smaller first, with |T1| <= ceil(n/2) and |T2| <= ceil(2n/3).
    """
    n = t.size
    if n < 2:
        raise TooSmall("need at least two vertices to split")
    size = _subtree_sizes(t)
    c = t.root
    while True:
        heavy = max(t.children[c], key=lambda u: (size[u], -u), default=None)
        if heavy is None or 2 * size[heavy] <= n:
            break
        c = heavy
    # components of t - c, each identified by its vertex adjacent to c
    comps = [(size[u], u) for u in t.children[c]]
    if t.parent[c] is not None:
        comps.append((n - size[c], t.parent[c]))
    comps.sort(key=lambda x: (-x[0], x[1]))
    first, taken = [], 0
    for s, u in comps:
        if 3 * taken >= n - 1:
            break
        first.append(u)
        taken += s
    second = [u for _, u in comps if u not in first]

    und = t.rerooted(c)
    und_size = _subtree_sizes(und)

    def part(heads):
        vs = {c}
        for h in heads:
            stack = [h]
            while stack:
                v = stack.pop()
                vs.add(v)
                stack.extend(und.children[v])
        assert len(vs) == 1 + sum(und_size[h] for h in heads)
        return und.induced(vs, root=c)

    a, b = part(first), part(second)
    return (a, b) if (a.size, a.vertices) <= (b.size, b.vertices) else (b, a)


@dataclass
class Decomposition:
    parts: list[RootedTree]
    case: int | None  # 1 or 2 after the top-level split; None if no split was needed
    first_sizes: tuple[int, int] | None


def decompose(t: RootedTree, k: int) -> Decomposition:
    """Cut a tree of at most 6k vertices into budget-k pieces.

    Top-level Jordan split into T1 (smaller) and T2; Case 1 when
    |T1| >= 3k - 1, Case 2 otherwise. Each side is then split recursively
    until every piece has at most k vertices. Pieces share cut vertices, and
    together they cover every vertex.
    """
    if k < K_MIN:
        raise BudgetTooSmall(f"decomposition needs k >= {K_MIN}, got {k}")
    if t.size > 6 * k:
        raise ValueError(f"tree has {t.size} > 6k = {6 * k} vertices")
    if t.size <= k:
        return Decomposition([t], None, None)
    t1, t2 = jordan_split(t)
    case = 1 if t1.size >= 3 * k - 1 else 2
    return Decomposition(_pieces(t1, k) + _pieces(t2, k), case, (t1.size, t2.size))


def _pieces(t, k):
    out, stack = [], [t]
    while stack:
        cur = stack.pop()
        if cur.size <= k:
            out.append(cur)
        else:
            a, b = jordan_split(cur)
            stack.extend((b, a))
    return out


def decompose_13(t: RootedTree, k: int) -> list[RootedTree]:
    return decompose(t, k).parts


def best_k_subtree(t: RootedTree, k: int) -> RootedTree:
    """Connected subtree of at most k vertices with the largest total profit.

    Tables, per vertex v and budget i:
      G[v][i]  best subtree inside T_v that contains v, at most i vertices
               (G[v][0] = 0 stands for "v not used" when v is a child)
      F[v][i]  best subtree anywhere inside T_v, at most i vertices
    G[v][i] = p(v) + best split of i - 1 among the children, which is a
    knapsack over the children in sorted order.
    """
    if k < 1:
        raise ValueError("budget must be at least 1")
    order = t.preorder()
    size = _subtree_sizes(t)
    G: dict[int, list[int]] = {}
    F: dict[int, list[int]] = {}
    F_from: dict[int, list[int]] = {}  # -1: take G[v][i]; otherwise the child holding F
    split: dict[int, list[list[int]]] = {}

    for v in reversed(order):
        cap = min(k, size[v])
        kids = t.children[v]
        # M[i'] for budgets 0..cap-1 over children processed so far
        M = [0] * cap
        choices = []
        for c in kids:
            gc = G[c]
            new_m, pick = list(M), [0] * cap
            for budget in range(1, cap):
                best, arg = M[budget], 0
                for give in range(1, min(budget, len(gc) - 1) + 1):
                    val = M[budget - give] + gc[give]
                    if val > best:
                        best, arg = val, give
                new_m[budget], pick[budget] = best, arg
            M = new_m
            choices.append(pick)
        split[v] = choices
        pv = t.profit[v]
        G[v] = [0] + [pv + M[i - 1] for i in range(1, cap + 1)]
        f_row, src = list(G[v]), [-1] * (cap + 1)
        for c in kids:
            fc = F[c]
            for i in range(1, cap + 1):
                val = fc[min(i, len(fc) - 1)]
                if val > f_row[i]:
                    f_row[i], src[i] = val, c
        F[v], F_from[v] = f_row, src

    def take_f(v, i):
        i = min(i, len(F[v]) - 1)
        while F_from[v][i] != -1:
            v = F_from[v][i]
            i = min(i, len(F[v]) - 1)
        return v, i

    top, budget = take_f(t.root, k)
    chosen = []
    stack = [(top, budget)]
    while stack:
        v, i = stack.pop()
        chosen.append(v)
        rem = i - 1
        kids = t.children[v]
        for j in range(len(kids) - 1, -1, -1):
            give = split[v][j][rem] if rem > 0 else 0
            if give:
                stack.append((kids[j], give))
                rem -= give
    return t.induced(chosen, root=top)


def _all_masks(n: int) -> np.ndarray:
    bits = _MASK_BITS.get(n)
    if bits is None:
        bits = ((np.arange(1 << n)[:, None] >> np.arange(n)) & 1).astype(np.int64)
        _MASK_BITS[n] = bits
    return bits


_MASK_BITS: dict[int, np.ndarray] = {}


def brute_best_subtree(t: RootedTree, k: int) -> RootedTree:
    """Exhaustive counterpart of best_k_subtree.

    Scores every vertex subset at once; inside a tree a subset is connected
    exactly when it spans |S| - 1 tree edges. Ties go to the lexicographically
    smallest sorted vertex tuple.
    """
    if t.size > BRUTE_LIMIT:
        raise TooLarge(f"brute force is limited to {BRUTE_LIMIT} vertices")
    if k < 1:
        raise ValueError("budget must be at least 1")
    verts = t.vertices
    index = {v: i for i, v in enumerate(verts)}
    bits = _all_masks(len(verts))
    size = bits.sum(axis=1)
    inner = np.zeros(len(bits), dtype=np.int64)
    for a, b in t.edges():
        inner += bits[:, index[a]] & bits[:, index[b]]
    ok = (size >= 1) & (size <= k) & (inner == size - 1)
    value = bits @ np.array([t.profit[v] for v in verts], dtype=np.int64)
    top = value[ok].max()
    best = min(tuple(np.flatnonzero(row).tolist()) for row in bits[ok & (value == top)])
    return t.induced(verts[i] for i in best)
