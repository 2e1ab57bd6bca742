"""Spin-1/2 Aharonov-Bohm problem in conical space: special functions,
scattering, bound states and the numerical oracles behind them."""

from ._abcone import (
    DomainError,
    Error,
    NumericalError,
    alpha_min,
    bessel_i,
    bessel_j,
    bessel_k,
    bessel_k_complex,
    bound_state_bg,
    bound_state_ks,
    cli,
    critical_channels,
    deficiency_indices,
    deficiency_norm,
    effective_j,
    gamma,
    mu_nu,
    nu_from_physical,
    phase_shift,
    run_verify,
    s_matrix,
    shell_bound_state,
    smatrix_pole,
)

__all__ = [name for name in dir() if not name.startswith("_")]
