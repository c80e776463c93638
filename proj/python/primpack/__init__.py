"""Exact primitive point packing: counts, delta_z, witnesses, oracle."""

from ._core import (
    ResourceLimitError,
    ball_stats,
    binomial,
    c_psi,
    c_psi_enumerate,
    c_psi_moebius,
    candidate_points,
    construct_extremal,
    cpsi_ratio,
    delta_z,
    dimension_growth_report,
    enumerate_ball_half,
    enumerate_shell_half,
    exception_density_report,
    exceptions_up_to,
    factorize,
    in_half_set,
    is_exceptional,
    is_primitive,
    is_unique_optimum,
    jordan_totient,
    kappa,
    lambda_value,
    locate_shell,
    max_sandwiched,
    moebius,
    norm1,
    orbit,
    polygon_vertices_2d,
    replacement_family,
    s_chain,
    sandwich_exists,
    sandwich_holds,
    shell_half_count,
    solve_exact,
    staircase_point,
    stirling_first,
    tau,
    zeta_approx,
    zonotope_summary,
)

__all__ = [
    "ResourceLimitError",
    "ball_stats",
    "binomial",
    "c_psi",
    "c_psi_enumerate",
    "c_psi_moebius",
    "candidate_points",
    "construct_extremal",
    "cpsi_ratio",
    "delta_z",
    "dimension_growth_report",
    "enumerate_ball_half",
    "enumerate_shell_half",
    "exception_density_report",
    "exceptions_up_to",
    "factorize",
    "in_half_set",
    "is_exceptional",
    "is_primitive",
    "is_unique_optimum",
    "jordan_totient",
    "kappa",
    "lambda_value",
    "locate_shell",
    "max_sandwiched",
    "moebius",
    "norm1",
    "orbit",
    "polygon_vertices_2d",
    "replacement_family",
    "s_chain",
    "sandwich_exists",
    "sandwich_holds",
    "shell_half_count",
    "solve_exact",
    "staircase_point",
    "stirling_first",
    "tau",
    "zeta_approx",
    "zonotope_summary",
]

__version__ = "0.1.0"
