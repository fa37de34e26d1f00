"""
Position-space wavefunctions of epsilon coherent states.
"""
import logging
import math
from typing import Any

import numpy as np

from ..config import DEFAULTS
from ..data_classes import StateLabel
from ..quad import gauss_hermite, integrate
from ..specfun import hermite, ho_eigenfunctions
from .coherent import coefficients, log_normalization, truncation_order

logger = logging.getLogger(__name__)


def wavefunction_series(x: Any, label: StateLabel, trunc: int = None):
    """
    Truncated expansion sum_{n<trunc} c_n phi_n(x) in the oscillator eigenbasis.

    Args:
        x: Real point(s)
        label: State label
        trunc: Number of terms (defaults to truncation_order(label))

    Returns:
        Complex value(s)
    """
    trunc = truncation_order(label) if trunc is None else trunc
    entries = coefficients(label, trunc).entries
    x_arr = np.asarray(x, dtype=float)
    basis = ho_eigenfunctions(trunc - 1, x_arr)
    value = np.tensordot(entries, basis, axes=(0, 0))
    return complex(value) if x_arr.ndim == 0 else value


def unnormalized_kernel(x: Any, z: complex, m: int, eps: float):
    """
    N^{1/2} psi_z(x): the closed-form wavefunction without its normalization.

    With a = e^{-eps/2}/sqrt(2),

        (-a)^m / (pi^{3/4} sqrt(m!)) exp(-x^2/2 + 2a x conj(z) - a^2 conj(z)^2)
            H_m(x - a conj(z) - z/(2a)).

    Valid for eps >= 0; the Hermite argument is complex.
    """
    x_arr = np.asarray(x, dtype=float)
    a = math.exp(-0.5 * eps) / math.sqrt(2.0)
    zc = complex(z).conjugate()
    exponent = -0.5 * x_arr ** 2 + 2.0 * a * x_arr * zc - a * a * zc * zc
    prefactor = (-a) ** m / (math.pi ** 0.75 * math.sqrt(math.factorial(m)))
    return prefactor * np.exp(exponent) * hermite(m, x_arr - a * zc - complex(z) / (2.0 * a))


def wavefunction_closed(x: Any, label: StateLabel):
    """
    Closed-form wavefunction

        psi(x) = (-1)^m (e^{-eps/2}/sqrt(2))^m / (pi^{3/4} sqrt(m!))
                 exp(-x^2/2 + sqrt(2) x conj(z) e^{-eps/2} - e^{-eps} conj(z)^2/2)
                 H_m(x - (e^{eps/2} z + e^{-eps/2} conj(z))/sqrt(2)) / sqrt(N_{m,eps}(z)).

    Args:
        x: Real point(s)
        label: State label

    Returns:
        Complex value(s)
    """
    x_arr = np.asarray(x, dtype=float)
    value = unnormalized_kernel(x_arr, label.z, label.m, label.eps) * math.exp(
        -0.5 * log_normalization(label)
    )
    return complex(value) if x_arr.ndim == 0 else value


def wavefunction_norm(label: StateLabel, order: int = None) -> float:
    """
    int |psi(x)|^2 dx by Gauss-Hermite quadrature with the weight restored.

    Args:
        label: State label
        order: Gauss-Hermite order (defaults to the configured norm order)

    Returns:
        The squared L2 norm, 1 for a correctly normalized state
    """
    order = DEFAULTS.norm_order if order is None else order
    rule = gauss_hermite(order)
    value = integrate(rule, lambda x: np.abs(wavefunction_closed(x, label)) ** 2, weighted=False)
    logger.debug("wavefunction norm for %s at order %d: %.15f", label, order, value.real)
    return value.real

