"""Weighted extremal functions of R^n, sphere lifts and verification suites."""

from ._core import (
    DomainError,
    alexander_sup,
    ball_density,
    baran_delta,
    baran_delta_numeric,
    fullin_residual,
    lie_norm,
    lie_u,
    lift,
    linear_lower_bound,
    ma_density,
    maximality,
    metric_tensor,
    omega_extremal,
    one_var_exact,
    run_suite,
    suite_names,
    total_mass,
    v_ball,
    v_kq,
    weight_q,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
