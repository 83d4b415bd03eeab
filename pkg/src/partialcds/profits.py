"""Monotone set functions over the vertices of a graph, plus a checker for
submodularity and neighborhood locality.

All three concrete profiles map vertex sets to nonnegative integers:

* domination:  number of vertices in N[S]
* weighted:    total weight of the vertices in N[S]
* capacitated: each member v of S dominates at most cap(v) vertices of
  N[v] (see CapacitatedDomination for the two available semantics)
"""
from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import Graph, closed_neighborhood_mask, mask_members, to_mask


class ProfitFn:
    """Base class: subclasses implement `_eval_mask`.

    Values are memoized by bitmask; the cache is guarded by a lock so a
    profile can be shared across threads.
    """

    kind = "abstract"

    def __init__(self, graph: Graph):
        self.graph = graph
        self._memo: dict[int, int] = {}
        self._lock = threading.Lock()

    def _eval_mask(self, mask: int) -> int:
        raise NotImplementedError

    def eval_mask(self, mask: int) -> int:
        with self._lock:
            hit = self._memo.get(mask)
        if hit is not None:
            return hit
        value = self._eval_mask(mask)
        with self._lock:
            if len(self._memo) > 1 << 16:
                self._memo.clear()
            self._memo[mask] = value
        return value

    def eval(self, s: Iterable[int]) -> int:
        return self.eval_mask(to_mask(s))

    __call__ = eval

    def marginal(self, s: Iterable[int], v: int) -> int:
        mask = to_mask(s)
        return self.eval_mask(mask | (1 << v)) - self.eval_mask(mask)

    def total(self) -> int:
        return self.eval_mask((1 << self.graph.n) - 1)

    def params(self) -> tuple:
        return ()

    def key(self) -> tuple:
        """Hashable identity used by caches."""
        return (self.kind, self.graph, self.params())

    def __repr__(self):
        return f"{type(self).__name__}(n={self.graph.n})"


class DominationCount(ProfitFn):
    kind = "domination"

    def _eval_mask(self, mask):
        return closed_neighborhood_mask(self.graph, mask).bit_count()


class WeightedDomination(ProfitFn):
    kind = "weighted"

    def __init__(self, graph: Graph, weights: Sequence[int]):
        if len(weights) != graph.n:
            raise ValueError(f"expected {graph.n} weights, got {len(weights)}")
        if any(int(w) < 0 for w in weights):
            raise ValueError("weights must be nonnegative")
        super().__init__(graph)
        self.weights = tuple(int(w) for w in weights)

    def params(self):
        return self.weights

    def _eval_mask(self, mask):
        cover = closed_neighborhood_mask(self.graph, mask)
        return sum(self.weights[u] for u in mask_members(cover))


class CapacitatedDomination(ProfitFn):
    """Capacity-limited domination.

    semantics="claim" (default): vertex v dominates a fixed claim set of
    min(cap(v), |N[v]|) vertices, namely v itself and then its neighbors in
    ascending id order; f(S) is the size of the union of the claims. This is
    a coverage function with every claim inside N[v], so it is submodular
    and neighborhood-local.

    semantics="assignment": f(S) is a maximum assignment of distinct
    vertices to members of S under the capacities. Submodular, but capacity
    can be rerouted through a shared member of A, so locality fails (see
    tests for a 4-vertex counterexample).
    """

    kind = "capacitated"

    def __init__(self, graph: Graph, capacities: Sequence[int], semantics: str = "claim"):
        if len(capacities) != graph.n:
            raise ValueError(f"expected {graph.n} capacities, got {len(capacities)}")
        if any(int(c) < 0 for c in capacities):
            raise ValueError("capacities must be nonnegative")
        if semantics not in ("claim", "assignment"):
            raise ValueError(f"unknown capacity semantics {semantics!r}")
        super().__init__(graph)
        self.capacities = tuple(int(c) for c in capacities)
        self.semantics = semantics
        self.claims = tuple(
            to_mask(((v,) + graph.adjacency[v])[:c]) for v, c in enumerate(self.capacities))

    def params(self):
        return (self.semantics, self.capacities)

    def _eval_mask(self, mask):
        if self.semantics == "assignment":
            return max_assignment(self.graph, mask_members(mask), self.capacities)
        cover = 0
        for v in mask_members(mask):
            cover |= self.claims[v]
        return cover.bit_count()


def max_assignment(g: Graph, chosen: Sequence[int], capacities: Sequence[int]) -> int:
    """Maximum b-matching from `chosen` (capacity cap(v)) into N[v] (capacity 1).

    Augmenting paths one unit at a time. A unit of v that fails to augment
    can never augment later, so each vertex stops at its first failure.
    """
    owner: dict[int, int] = {}
    nbrs = {v: (v,) + g.adjacency[v] for v in chosen}

    def augment(v, visited):
        for u in nbrs[v]:
            if u in visited:
                continue
            visited.add(u)
            w = owner.get(u)
            if w is None or augment(w, visited):
                owner[u] = v
                return True
        return False

    for v in chosen:
        for _ in range(capacities[v]):
            if not augment(v, set()):
                break
    return len(owner)


def domination_count(g: Graph) -> DominationCount:
    return DominationCount(g)


def weighted_domination(g: Graph, w: Sequence[int]) -> WeightedDomination:
    return WeightedDomination(g, w)


def capacitated_domination(g: Graph, cap: Sequence[int], semantics: str = "claim") -> CapacitatedDomination:
    return CapacitatedDomination(g, cap, semantics)


@dataclass
class Violation:
    axiom: str  # "submodular" or "locality"
    a: tuple[int, ...]
    b: tuple[int, ...]
    x: tuple[int, ...]
    lhs: int
    rhs: int


@dataclass
class SubmodularityReport:
    exhaustive: bool
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def check_special_submodular(f: ProfitFn, g: Graph, trials: int = 200, seed: int = 0,
                             exhaustive_limit: int = 8) -> SubmodularityReport:
    """Look for violations of diminishing returns and of neighborhood locality.

    For n <= exhaustive_limit every case is covered: diminishing returns over
    all A <= B and v, locality over all A and all singletons x, b with
    N[x] and N[b] disjoint. The singleton form of locality is equivalent to
    the set form (telescope the marginal of X element by element, then add B
    element by element). Larger graphs are sampled, with set-valued X and B.
    """
    n = g.n
    full = (1 << n) - 1
    closed = g.closed_masks
    report = SubmodularityReport(exhaustive=n <= exhaustive_limit)

    if report.exhaustive:
        values = [f.eval_mask(m) for m in range(1 << n)]
        for b_mask in range(1 << n):
            # every submask a of b
            a_mask = b_mask
            while True:
                for v in range(n):
                    bit = 1 << v
                    lhs = values[a_mask | bit] - values[a_mask]
                    rhs = values[b_mask | bit] - values[b_mask]
                    report.checked += 1
                    if lhs < rhs:
                        report.violations.append(Violation(
                            "submodular", tuple(mask_members(a_mask)), tuple(mask_members(b_mask)),
                            (v,), lhs, rhs))
                if a_mask == 0:
                    break
                a_mask = (a_mask - 1) & b_mask
        far_pairs = [(x, b) for x in range(n) for b in range(n) if not closed[x] & closed[b]]
        for a_mask in range(1 << n):
            for x, b in far_pairs:
                xb, bb = 1 << x, 1 << b
                lhs = values[a_mask | xb] - values[a_mask]
                rhs = values[a_mask | bb | xb] - values[a_mask | bb]
                report.checked += 1
                if lhs != rhs:
                    report.violations.append(Violation(
                        "locality", tuple(mask_members(a_mask)), (b,), (x,), lhs, rhs))
        return report

    rng = random.Random(seed)
    ev = f.eval_mask
    for _ in range(trials):
        b_mask = rng.getrandbits(n) & full
        a_mask = b_mask & rng.getrandbits(n)
        v = rng.randrange(n)
        bit = 1 << v
        lhs = ev(a_mask | bit) - ev(a_mask)
        rhs = ev(b_mask | bit) - ev(b_mask)
        report.checked += 1
        if lhs < rhs:
            report.violations.append(Violation(
                "submodular", tuple(mask_members(a_mask)), tuple(mask_members(b_mask)), (v,), lhs, rhs))

        x_mask = rng.getrandbits(n) & full or (1 << rng.randrange(n))
        reach = closed_neighborhood_mask(g, x_mask)
        far = [u for u in range(n) if not closed[u] & reach]
        bb = to_mask(u for u in far if rng.random() < 0.5)
        a_mask = rng.getrandbits(n) & full
        lhs = ev(a_mask | x_mask) - ev(a_mask)
        rhs = ev(a_mask | bb | x_mask) - ev(a_mask | bb)
        report.checked += 1
        if lhs != rhs:
            report.violations.append(Violation(
                "locality", tuple(mask_members(a_mask)), tuple(mask_members(bb)),
                tuple(mask_members(x_mask)), lhs, rhs))
    return report
