"""Exact strong domination numbers, Hajos sums and vertex-sums, and bound checks."""

from .bounds import (
    BoundReport,
    check_copies_bounds,
    check_hajos_bounds,
    check_vsum_bounds,
    hajos_upper_case,
    replay_hajos_upper_construction,
    replay_vsum_upper_construction,
)
from .errors import (
    EdgeNotPresent,
    HypothesisViolated,
    InvalidParameter,
    InvalidVertex,
    InvalidWitness,
    NoSetWithinCap,
    OracleTooLarge,
    ParseError,
    SelfLoopRejected,
    StrongDomError,
)
from .graph import (
    Graph,
    complete_graph,
    cycle_graph,
    is_connected,
    is_pendant,
    make_graph,
    neighbors,
    path_graph,
    star_graph,
)
from .io import read_graph, write_graph
from .ops import FusionResult, HajosSpec, VertexSumSpec, hajos_sum, vertex_sum, vertex_sum_copies
from .solver import (
    Method,
    SolveResult,
    forced_vertices,
    gamma_plain,
    gamma_st,
    gamma_st_bruteforce,
    gamma_st_exact,
    gamma_w,
    greedy_upper_bound,
    is_dominating,
    is_strong_dominating,
    is_weak_dominating,
)

__version__ = "0.1.0"
