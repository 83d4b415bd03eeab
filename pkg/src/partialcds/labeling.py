"""Greedy first phase: pick vertices by largest marginal gain and label each
pick with the gain it earned. Unpicked vertices get label 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NonmonotoneProfit
from .graph import Graph, mask_members
from .profits import ProfitFn


@dataclass(frozen=True)
class Labeling:
    order: tuple[int, ...]
    profit: tuple[int, ...]
    cover_sets: dict[int, frozenset[int]] | None = field(default=None, compare=False)

    @property
    def chosen(self) -> frozenset[int]:
        return frozenset(self.order)

    def total(self) -> int:
        return sum(self.profit)


def greedy_dominating_set(g: Graph) -> Labeling:
    """Repeatedly pick the vertex covering the most undominated vertices."""
    closed = g.closed_masks
    undominated = (1 << g.n) - 1
    picked = [False] * g.n
    order: list[int] = []
    profit = [0] * g.n
    cover_sets = {}
    while undominated:
        best, best_gain = -1, -1
        for v in range(g.n):
            if picked[v]:
                continue
            gain = (closed[v] & undominated).bit_count()
            if gain > best_gain:
                best, best_gain = v, gain
        newly = closed[best] & undominated
        cover_sets[best] = frozenset(mask_members(newly))
        profit[best] = best_gain
        picked[best] = True
        order.append(best)
        undominated &= ~newly
    return Labeling(tuple(order), tuple(profit), cover_sets)


def generalized_greedy(g: Graph, f: ProfitFn) -> Labeling:
    """Greedy basis of the polymatroid of f: stop once f(D) reaches f(V)."""
    target = f.total()
    chosen = 0
    current = f.eval_mask(0)
    if current != 0:
        raise ValueError(f"profit function must vanish on the empty set, got {current}")
    order: list[int] = []
    profit = [0] * g.n
    while current != target:
        best, best_gain = -1, None
        for v in range(g.n):
            if chosen >> v & 1:
                continue
            gain = f.eval_mask(chosen | (1 << v)) - current
            if gain < 0:
                raise NonmonotoneProfit(f"negative marginal {gain} for vertex {v}")
            if best_gain is None or gain > best_gain:
                best, best_gain = v, gain
        if best < 0 or best_gain == 0:
            # f(D) < f(V) yet nothing helps: f is not monotone
            raise NonmonotoneProfit("no vertex increases f although f(D) != f(V)")
        chosen |= 1 << best
        current += best_gain
        profit[best] = best_gain
        order.append(best)
    return Labeling(tuple(order), tuple(profit))
