"""Exact solvers for minimum sum vertex cover.

Order the vertices 1..n; every edge pays the position of its earlier
endpoint; minimize the total.  The package provides an exhaustive oracle,
the greedy baseline, and two exact fixed-parameter solvers (parameterized
by vertex cover size and by clique modulator size), plus the bounded
integer-quadratic-program engine the modulator solver runs on.
"""

from .errors import BudgetExceeded, ParameterExceeded
from .graphs import (ClassPartition, Graph, Ordering, complement,
                     complete_graph, cost_from_right_degrees, cycle_graph,
                     evaluate_cost, is_connected, partition_by_separator,
                     path_graph, random_graph, right_degree, star_graph,
                     swap_equal_rd_nonadjacent)
from .oracle import (brute_force_msvc, greedy_msvc,
                     verify_optimal_right_degree_monotone)
from .vertex_cover import (Configuration, VcInstance, make_vc_instance,
                           min_vertex_cover, realize_configuration,
                           solve_vc_fpt)
from .iqp import IqpInstance, IqpSolution, dump_instance, solve_iqp
from .clique_modulator import (CmEncoding, CmInstance, build_encoding,
                               clique_base_cost, find_clique_modulator,
                               make_cm_instance, nice_resort,
                               reconstruct_ordering, right_modulator_degree,
                               solve_cm_fpt)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded", "ParameterExceeded",
    "Graph", "Ordering", "ClassPartition",
    "evaluate_cost", "right_degree", "cost_from_right_degrees",
    "partition_by_separator", "swap_equal_rd_nonadjacent", "complement",
    "is_connected", "random_graph", "complete_graph", "path_graph",
    "cycle_graph", "star_graph",
    "brute_force_msvc", "greedy_msvc", "verify_optimal_right_degree_monotone",
    "min_vertex_cover", "VcInstance", "make_vc_instance", "Configuration",
    "realize_configuration", "solve_vc_fpt",
    "IqpInstance", "IqpSolution", "solve_iqp", "dump_instance",
    "find_clique_modulator", "CmInstance", "make_cm_instance", "CmEncoding",
    "right_modulator_degree", "build_encoding", "reconstruct_ordering",
    "nice_resort", "solve_cm_fpt", "clique_base_cost",
]
