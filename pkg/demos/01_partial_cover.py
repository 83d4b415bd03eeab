"""Partial connected domination on a small random graph.

Walks through the quota pipeline by hand: greedy labels, then the quota
Steiner tree over those labels, then a look at the brute-force optimum.
"""
import math

from partialcds.graph import max_degree
from partialcds.instances import gen_gnp
from partialcds.labeling import greedy_dominating_set
from partialcds.oracles import opt_pcds
from partialcds.pipelines import solve_pcds
from partialcds.qst import qst_exact

inst = gen_gnp(12, 0.3, seed=7)
g = inst.graph
print(inst.label, "n =", g.n, "m =", g.m, "max degree =", max_degree(g))

# phase 1: every greedy pick is labeled with the vertices it newly dominates
labels = greedy_dominating_set(g)
for v in labels.order:
    print(f"  pick {v:2d}  label {labels.profit[v]}  covers {sorted(labels.cover_sets[v])}")

# phase 2: smallest tree whose labels reach the quota
quota = math.ceil(3 * g.n / 4)
tree = qst_exact(g, labels.profit, quota)
print("quota", quota, "-> tree on", sorted(tree.vertices), "with", tree.cost, "edges")

# the labels partition V, so the tree dominates at least `quota` vertices
sol = solve_pcds(g, quota)
opt = opt_pcds(g, quota)
bound = 2 * opt.size * math.log(max_degree(g)) + opt.size + 2
print(f"pipeline size {sol.size} (dominates {sol.objective}), optimum {opt.size}, guarantee {bound:.2f}")
