"""Compact finite-difference schemes for time-fractional diffusion problems."""

from ._core import (
    __version__,
    gen_fn_subdiffusion,
    gen_fn_wave,
    grunwald_derivative_weights,
    grunwald_integral_weights,
    lambda_subdiffusion,
    lambda_wave,
    problem_ids,
    rate_study,
    solve_final,
    toeplitz_min_eigenvalue,
)

__all__ = [
    "__version__",
    "gen_fn_subdiffusion",
    "gen_fn_wave",
    "grunwald_derivative_weights",
    "grunwald_integral_weights",
    "lambda_subdiffusion",
    "lambda_wave",
    "problem_ids",
    "rate_study",
    "solve_final",
    "toeplitz_min_eigenvalue",
]
