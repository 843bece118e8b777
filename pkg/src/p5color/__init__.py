"""Exact k-colouring and restricted list colouring of P5-free graphs."""

from .context import SolveConfig, SolveMetrics
from .dimacs import DimacsError, read_dimacs, write_dimacs
from .errors import (
    BudgetExceeded,
    ClaimViolated,
    HDisconnected,
    NoLemma1Vertex,
    NotP5Free,
    TwoCrossingComponents,
)
from .graph import Graph, connected_components, induced_subgraph, is_clique, is_p3
from .instance import Instance, assign, branch_on_vertex, col, dependent, full_instance, make_instance
from .solver import Decision, k_colourable, solve_list_colouring, verify_colouring
from .structure import (
    DominatingSeed,
    P5Certificate,
    enumerate_cliques_up_to,
    find_dominating_clique_or_p3,
    find_induced_p5,
    is_p5_free,
)

__all__ = [
    "BudgetExceeded",
    "ClaimViolated",
    "Decision",
    "DimacsError",
    "DominatingSeed",
    "Graph",
    "HDisconnected",
    "Instance",
    "NoLemma1Vertex",
    "NotP5Free",
    "P5Certificate",
    "SolveConfig",
    "SolveMetrics",
    "TwoCrossingComponents",
    "assign",
    "branch_on_vertex",
    "col",
    "connected_components",
    "dependent",
    "enumerate_cliques_up_to",
    "find_dominating_clique_or_p3",
    "find_induced_p5",
    "full_instance",
    "induced_subgraph",
    "is_clique",
    "is_p3",
    "is_p5_free",
    "k_colourable",
    "make_instance",
    "read_dimacs",
    "solve_list_colouring",
    "verify_colouring",
    "write_dimacs",
]
