"""Minimum-weight simple k-paths through automata products, plus a GF(2) parity-automaton decision procedure."""

__version__ = "0.1.0"

from .errors import (BudgetError, CycleError, KPathError, NegativeCycleError, ParameterError,
                     ParseError, PreconditionError, StructureError, ValidationError)
from .graph import (PathResult, WeightedDigraph, add_super_terminals, parse_graph, random_graph,
                    read_graph, serialize_graph, write_graph)
from .lkn import LknBuildReport, build_lkn, check_fooling_separation, fooling_pairs
from .nfa import (EPS, Nfa, accepts, eliminate_epsilon, intersect, is_acyclic, path_automaton,
                  reachable_trim, topological_order)
from .nxa import (BitMatrix, CoveringFamily, Nxa, count_accepting_paths_mod2, covering_random,
                  nxa_intersect_dfa, phi_det, ryser_chain, ryser_union, verify_covering,
                  xor_empty, xor_witness)
from .search import (WeightedProduct, project_to_graph_path, shortest_accepting,
                     shortest_accepting_bellman_ford, shortest_accepting_dag,
                     shortest_accepting_dijkstra, weighted_product)
from .solvers import (SolveConfig, min_wt_simple_kpath, min_wt_simple_st_kpath,
                      simple_kpath_exists_nxa)
from .universal import (AutoProvider, GreedyProvider, RandomProvider, UniversalFamily,
                        universal_greedy, universal_random, verify_universal)

__all__ = [
    "__version__",
    "BudgetError",
    "CycleError",
    "KPathError",
    "NegativeCycleError",
    "ParameterError",
    "ParseError",
    "PreconditionError",
    "StructureError",
    "ValidationError",
    "PathResult",
    "WeightedDigraph",
    "add_super_terminals",
    "parse_graph",
    "random_graph",
    "read_graph",
    "serialize_graph",
    "write_graph",
    "LknBuildReport",
    "build_lkn",
    "check_fooling_separation",
    "fooling_pairs",
    "EPS",
    "Nfa",
    "accepts",
    "eliminate_epsilon",
    "intersect",
    "is_acyclic",
    "path_automaton",
    "reachable_trim",
    "topological_order",
    "BitMatrix",
    "CoveringFamily",
    "Nxa",
    "count_accepting_paths_mod2",
    "covering_random",
    "nxa_intersect_dfa",
    "phi_det",
    "ryser_chain",
    "ryser_union",
    "verify_covering",
    "xor_empty",
    "xor_witness",
    "WeightedProduct",
    "project_to_graph_path",
    "shortest_accepting",
    "shortest_accepting_bellman_ford",
    "shortest_accepting_dag",
    "shortest_accepting_dijkstra",
    "weighted_product",
    "SolveConfig",
    "min_wt_simple_kpath",
    "min_wt_simple_st_kpath",
    "simple_kpath_exists_nxa",
    "AutoProvider",
    "GreedyProvider",
    "RandomProvider",
    "UniversalFamily",
    "universal_greedy",
    "universal_random",
    "verify_universal",
]
