"""
Epsilon coherent states: coefficients, overlaps, wavefunctions and the heat semigroup.
"""
from .coherent import (
    coefficients,
    log_normalization,
    log_normalization_at,
    normalization,
    normalized_reproducing_kernel,
    overlap,
    overlap_limit_defect,
    overlap_series,
    thermal_shift,
    truncation_order,
)
from .heat import apply_heat, heat_kernel, heat_limit_defects, heat_series, mehler_kernel, mehler_series
from .wavefunction import unnormalized_kernel, wavefunction_closed, wavefunction_norm, wavefunction_series

__all__ = [
    "coefficients",
    "log_normalization",
    "log_normalization_at",
    "normalization",
    "normalized_reproducing_kernel",
    "overlap",
    "overlap_limit_defect",
    "overlap_series",
    "thermal_shift",
    "truncation_order",
    "apply_heat",
    "heat_kernel",
    "heat_limit_defects",
    "heat_series",
    "mehler_kernel",
    "mehler_series",
    "unnormalized_kernel",
    "wavefunction_closed",
    "wavefunction_norm",
    "wavefunction_series",
]
