"""Where look-ahead greedy goes wrong.

Spider heads are joined by connector paths; each head also carries legs.
A look-ahead greedy that can see c steps ahead reaches the next head
through a connector, unless extending a leg looks just as good. With legs of
length 1 the connectors win and look-ahead does fine. With legs of c+1
vertices and unlucky tie breaking the greedy keeps extending legs and
strands its budget around one head.
"""
from partialcds.instances import gen_spider
from partialcds.pipelines import lookahead_greedy_bcds, solve_bcds

heads, c = 4, 2
k = heads + (c + 1) * (heads - 1)

for leg_len, tie in [(1, "smallest"), (c + 1, "largest")]:
    print(f"\nlegs of {leg_len} vertices, ties to the {tie} path, budget k={k}")
    print("   M    n  lookahead  ours  ratio")
    for m in (5, 10, 20, 40):
        g = gen_spider(heads, c, m, leg_len).graph
        base = lookahead_greedy_bcds(g, k, c, tie)
        ours = solve_bcds(g, k)
        print(f"{m:4d} {g.n:4d} {base.objective:10d} {ours.objective:5d}  {base.objective / ours.objective:.3f}")
