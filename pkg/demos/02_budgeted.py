"""Budgeted coverage: what k connected vertices can dominate.

The budgeted pipeline guesses the optimum, asks for a tree covering a
(1 - 1/e) share of the guess, and cuts the best k-vertex subtree out of it.
"""
from partialcds.instances import gen_gnp, with_profiles
from partialcds.oracles import opt_bcds, opt_bgcds
from partialcds.pipelines import COVER_FRACTION, solve_bcds, solve_bgcds
from partialcds.profits import capacitated_domination, weighted_domination

inst = with_profiles(gen_gnp(11, 0.35, seed=3), seed=3)
g = inst.graph
print(inst.label, "n =", g.n)
print("weights   ", inst.weights)
print("capacities", inst.capacities)

print("\n k  ours  opt  guess  qst-size")
for k in range(1, 6):
    sol = solve_bcds(g, k)
    opt = opt_bcds(g, k)
    print(f"{k:2d}  {sol.objective:4d} {opt.objective:4d}  {sol.meta['opt_guess']:5d}  {sol.meta['qst_size']:5d}")

floor = COVER_FRACTION / 13
print(f"\nguaranteed share of the optimum: {floor:.4f}")

for name, f in [("weighted", weighted_domination(g, inst.weights)),
                ("capacitated", capacitated_domination(g, inst.capacities))]:
    sol, opt = solve_bgcds(g, f, 3), opt_bgcds(g, f, 3)
    print(f"{name:12s} k=3: ours {sol.objective} on {sorted(sol.chosen)}, optimum {opt.objective} on {sorted(opt.chosen)}")
