"""Active-set accelerated Frank-Wolfe and projected-gradient solvers over the unit simplex."""

from ._core import (
    ActiveSetEstimate,
    ChebyshevObjective,
    GeneratedQuadratic,
    IterationRecord,
    Objective,
    QuadraticObjective,
    SolveResult,
    active_set_estimate,
    gen_chebyshev,
    gen_quadratic,
    is_feasible,
    load_problem,
    multipliers,
    project_simplex,
    random_start,
    solve,
    stationarity_gap,
)

__all__ = [
    "ActiveSetEstimate",
    "ChebyshevObjective",
    "GeneratedQuadratic",
    "IterationRecord",
    "Objective",
    "QuadraticObjective",
    "SolveResult",
    "active_set_estimate",
    "gen_chebyshev",
    "gen_quadratic",
    "is_feasible",
    "load_problem",
    "multipliers",
    "project_simplex",
    "random_start",
    "solve",
    "stationarity_gap",
]

__version__ = "0.1.0"
