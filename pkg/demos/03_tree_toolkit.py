"""Splitting trees into budget-sized pieces and picking the best subtree."""
import random

from partialcds.trees import RootedTree, best_k_subtree, brute_best_subtree, decompose, jordan_split

rng = random.Random(1)
n = 60
edges = [(i, rng.randrange(i)) for i in range(1, n)]
t = RootedTree.from_edges(range(n), edges, 0, {v: rng.randint(0, 9) for v in range(n)})

a, b = jordan_split(t)
print(f"Jordan split of {n} vertices: {a.size} + {b.size} (shared vertex {a.root})")

k = 10
d = decompose(t, k)
print(f"decompose with k={k}: case {d.case}, top split {d.first_sizes}, {len(d.parts)} parts")
print("  part sizes:", [p.size for p in d.parts])

# a small path where greedy from one end would go wrong
path = RootedTree.from_edges(range(5), [(i, i + 1) for i in range(4)], 0,
                             dict(enumerate([1, 100, 1, 100, 1])))
best = best_k_subtree(path, 3)
print("best 3-subtree of 1-100-1-100-1:", best.vertices, "profit", best.total_profit())

# dynamic program against brute force on random trees
agree = 0
for _ in range(200):
    m = rng.randint(1, 14)
    tt = RootedTree.from_edges(range(m), [(i, rng.randrange(i)) for i in range(1, m)], 0,
                               {v: rng.randint(0, 9) for v in range(m)})
    kk = rng.randint(1, m)
    agree += best_k_subtree(tt, kk).total_profit() == brute_best_subtree(tt, kk).total_profit()
print(f"DP agrees with brute force on {agree}/200 random trees")
