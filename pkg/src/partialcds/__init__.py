"""Partial and budgeted connected dominating sets via greedy profit labels
and quota Steiner trees."""
from .errors import (BudgetTooSmall, CDSError, Infeasible, InfeasibleQuota, InvalidVertex,
                     NonmonotoneProfit, ParseError, SelfLoopRejected, TooLarge, TooSmall, Unreachable)
from .graph import (Graph, closed_neighborhood, from_edge_list, is_connected_induced, max_degree,
                    shortest_path)
from .instances import (Instance, gen_gnp, gen_spider, gen_unit_disk, parse_instance, parse_solution,
                        serialize_instance, serialize_solution)
from .labeling import Labeling, generalized_greedy, greedy_dominating_set
from .oracles import enumerate_connected_subsets, opt_bcds, opt_bgcds, opt_pcds, opt_pgcds
from .pipelines import lookahead_greedy_bcds, solve_bcds, solve_bgcds, solve_pcds, solve_pgcds
from .profits import (ProfitFn, capacitated_domination, check_special_submodular, domination_count,
                      weighted_domination)
from .qst import VertexTree, qst_exact, qst_heuristic, qst_solve
from .solution import Solution
from .trees import RootedTree, best_k_subtree, brute_best_subtree, decompose_13, jordan_split

__version__ = "0.1.0"
