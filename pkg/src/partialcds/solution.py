from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .graph import Graph, is_connected_induced
from .profits import ProfitFn
from .qst import VertexTree, tree_on


@dataclass(frozen=True)
class Solution:
    chosen: frozenset[int]
    objective: int
    tree: VertexTree
    meta: dict[str, Any] = field(default_factory=dict, compare=False)

    @property
    def size(self) -> int:
        return len(self.chosen)


def make_solution(g: Graph, chosen, f: ProfitFn, tree: VertexTree | None = None, **meta) -> Solution:
    """Build a Solution, recomputing the objective from scratch."""
    chosen = frozenset(chosen)
    if not is_connected_induced(g, chosen):
        raise ValueError("chosen set does not induce a connected subgraph")
    if tree is None or tree.vertices != chosen:
        tree = tree_on(g, chosen, tree.engine if tree is not None else None)
    return Solution(chosen, f.eval(chosen), tree, meta)
