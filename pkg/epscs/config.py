"""
Numerical defaults shared by every module.
"""
import math
from dataclasses import dataclass, fields, replace
from typing import Any

from .exceptions import DomainError


@dataclass(frozen=True)
class NumericsConfig:
    """
    Default orders, truncations and tolerances.

    Every public function takes explicit keyword overrides; these values are
    only what it falls back to.
    """

    # Polar rule on the complex plane: Gauss-Laguerre in |z|^2 x uniform angle
    polar_radial_order: int = 64
    polar_angular_order: int = 64

    # Gauss-Hermite orders for real-line integrals
    transform_order: int = 96
    heat_order: int = 96
    norm_order: int = 96
    hermite_integral_order: int = 128

    # Series truncations used by the oracles
    kernel_series_trunc: int = 200
    mehler_series_trunc: int = 300

    # N* = ceil(e |z|^2 e^-eps) + m + margin
    truncation_margin: int = 40

    # |log value| beyond which CLI rows switch to the log domain
    log_print_threshold: float = 300.0

    # Relative tolerance of the doubled-order quadrature self-check
    adequacy_tol: float = 1e-10

    # Largest admissible Gauss-Hermite order
    max_hermite_order: int = 512

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{f.name} must be positive, got {value!r}")

    def replace(self, **overrides: Any) -> "NumericsConfig":
        """
        Return a copy with some fields replaced.

        Args:
            **overrides: Field values to change

        Returns:
            A new validated NumericsConfig
        """
        return replace(self, **overrides)


DEFAULTS = NumericsConfig()
