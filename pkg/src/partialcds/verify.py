"""Independent audit of a solution file against an instance file.

Deliberately shares nothing with the solvers except the text parsers: the
objective is recounted here with plain sets (and scipy max-flow for the
assignment capacity model).
"""
from __future__ import annotations

from collections import deque

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_flow

from .instances import Instance, SolutionRecord

PARTIAL = ("pcds", "pgcds")
BUDGETED = ("bcds", "bgcds")


def recount(inst: Instance, chosen: list[int], profile: str = "dom", semantics: str = "claim") -> int:
    g = inst.graph
    closed = {v: {v, *g.adjacency[v]} for v in chosen}
    if profile == "dom":
        return len(set().union(*closed.values())) if chosen else 0
    if profile == "weighted":
        if inst.weights is None:
            raise ValueError("instance has no weights")
        covered = set().union(*closed.values()) if chosen else set()
        return sum(inst.weights[u] for u in covered)
    if profile == "capacitated":
        if inst.capacities is None:
            raise ValueError("instance has no capacities")
        cap = inst.capacities
        if semantics == "claim":
            covered = set()
            for v in chosen:
                covered.update(([v] + list(g.adjacency[v]))[:cap[v]])
            return len(covered)
        return _assignment_flow(g.n, closed, cap)
    raise ValueError(f"unknown profile {profile!r}")


def _assignment_flow(n, closed, cap):
    # nodes: 0 source, 1..n chosen side, n+1..2n covered side, 2n+1 sink
    if not closed:
        return 0
    src, sink = 0, 2 * n + 1
    rows, cols, vals = [], [], []
    for v, nb in closed.items():
        rows.append(src); cols.append(1 + v); vals.append(cap[v])
        for u in nb:
            rows.append(1 + v); cols.append(1 + n + u); vals.append(1)
    for u in set().union(*closed.values()):
        rows.append(1 + n + u); cols.append(sink); vals.append(1)
    mat = csr_matrix((np.array(vals, dtype=np.int32), (rows, cols)), shape=(2 * n + 2, 2 * n + 2))
    return int(maximum_flow(mat, src, sink).flow_value)


def verify(inst: Instance, sol: SolutionRecord, problem: str, param: int,
           profile: str = "dom", semantics: str = "claim") -> list[str]:
    """Return a list of human-readable violations; empty means the solution holds."""
    g = inst.graph
    issues = []
    verts = sol.vertices
    if problem not in PARTIAL + BUDGETED:
        return [f"unknown problem {problem!r}"]
    if problem in ("pcds", "bcds") and profile != "dom":
        issues.append(f"{problem} is scored by plain domination, not {profile!r}")
        profile = "dom"
    bad = [v for v in verts if not 0 <= v < g.n]
    if bad:
        return [f"vertex ids out of range: {bad}"]
    if len(set(verts)) != len(verts):
        issues.append("repeated vertex ids")
    chosen = sorted(set(verts))
    inside = set(chosen)
    if not chosen:
        issues.append("solution is empty")

    # connectivity of the induced subgraph
    if chosen:
        seen = {chosen[0]}
        queue = deque([chosen[0]])
        while queue:
            v = queue.popleft()
            for u in g.adjacency[v]:
                if u in inside and u not in seen:
                    seen.add(u)
                    queue.append(u)
        if seen != inside:
            issues.append(f"chosen set is not connected ({len(inside) - len(seen)} vertices cut off)")

    # tree edges
    if len(sol.edges) != max(len(chosen) - 1, 0):
        issues.append(f"tree has {len(sol.edges)} edges, expected {max(len(chosen) - 1, 0)}")
    parent = {v: v for v in chosen}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in sol.edges:
        if u not in inside or v not in inside:
            issues.append(f"tree edge ({u}, {v}) leaves the chosen set")
            continue
        if v not in g.adjacency[u]:
            issues.append(f"tree edge ({u}, {v}) is not a graph edge")
            continue
        ru, rv = find(u), find(v)
        if ru == rv:
            issues.append(f"tree edge ({u}, {v}) closes a cycle")
        else:
            parent[ru] = rv

    try:
        actual = recount(inst, chosen, profile, semantics)
    except ValueError as exc:
        return issues + [str(exc)]
    if actual != sol.objective:
        issues.append(f"objective mismatch: file says {sol.objective}, recount gives {actual}")
    if problem in PARTIAL and actual < param:
        issues.append(f"quota not met: {actual} < {param}")
    if problem in BUDGETED and len(chosen) > param:
        issues.append(f"budget exceeded: {len(chosen)} > {param}")
    return issues
