"""
Mehler kernel and the oscillator heat semigroup e^{-eps H}.

The spectral series are summed through normalized Hermite functions,

    pi^{-1/2} sum (tau/2)^n H_n(x) H_n(y) / n! = e^{(x^2+y^2)/2} sum tau^n phi_n(x) phi_n(y),

so no 2^n n! is formed.
"""
import logging
import math
from typing import Any, List, Sequence, Union

import numpy as np

from ..config import DEFAULTS
from ..data_classes import Integrand, SampledFunction, as_function
from ..exceptions import DomainError, NonFiniteIntegrandError
from ..quad import check_adequacy, doubled_order, gauss_hermite
from ..specfun import ho_eigenfunctions

logger = logging.getLogger(__name__)


def _check_tau(tau: float) -> float:
    if not (math.isfinite(tau) and 0.0 < tau < 1.0):
        raise DomainError(f"tau must lie in (0, 1), got {tau!r}")
    return float(tau)


def _mehler(tau: float, one_minus_sq: float, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    exponent = 2.0 * tau / (1.0 + tau) * x * y - tau * tau / one_minus_sq * (x - y) ** 2
    return np.exp(exponent) / math.sqrt(math.pi * one_minus_sq)


def mehler_kernel(tau: float, x: Any, y: Any):
    """
    Closed-form Mehler kernel

        pi^{-1/2} (1 - tau^2)^{-1/2} exp(2 tau/(1 + tau) x y - tau^2/(1 - tau^2) (x - y)^2).

    Args:
        tau: Parameter in (0, 1)
        x, y: Real point(s), broadcast together

    Returns:
        Real value(s)
    """
    tau = _check_tau(tau)
    value = _mehler(tau, 1.0 - tau * tau, np.asarray(x, dtype=float), np.asarray(y, dtype=float))
    return float(value) if value.ndim == 0 else value


def mehler_series(tau: float, x: float, y: float, trunc: int = None) -> float:
    """
    Partial sum of pi^{-1/2} sum_{n<trunc} (tau/2)^n H_n(x) H_n(y) / n!.

    Args:
        tau: Parameter in (0, 1)
        x, y: Real points
        trunc: Number of terms (defaults to the configured Mehler truncation)

    Returns:
        The partial sum
    """
    tau = _check_tau(tau)
    trunc = DEFAULTS.mehler_series_trunc if trunc is None else trunc
    basis = ho_eigenfunctions(trunc - 1, np.array([x, y], dtype=float))
    terms = tau ** np.arange(trunc) * basis[:, 0] * basis[:, 1]
    return math.exp(0.5 * (x * x + y * y)) * math.fsum(terms)


def heat_kernel(eps: float, x: Any, y: Any):
    """
    Heat kernel G_eps(x, y) = e^{-(x^2 + y^2)/2} mehler_kernel(e^{-eps}, x, y).

    Symmetric in (x, y) to the last bit. 1 - e^{-2 eps} is taken from expm1, so
    eps below the double resolution of e^{-eps} still gives a finite kernel.
    """
    if not (math.isfinite(eps) and eps > 0):
        raise DomainError(f"eps must be positive, got {eps!r}")
    x_arr = np.asarray(x, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    mehler = _mehler(math.exp(-eps), -math.expm1(-2.0 * eps), x_arr, y_arr)
    value = np.exp(-0.5 * (x_arr ** 2 + y_arr ** 2)) * mehler
    return float(value) if np.ndim(value) == 0 else value


def heat_series(eps: float, x: float, y: float, trunc: int = None) -> float:
    """Spectral partial sum sum_{n<trunc} e^{-n eps} phi_n(x) phi_n(y)."""
    if not (math.isfinite(eps) and eps > 0):
        raise DomainError(f"eps must be positive, got {eps!r}")
    trunc = DEFAULTS.mehler_series_trunc if trunc is None else trunc
    basis = ho_eigenfunctions(trunc - 1, np.array([x, y], dtype=float))
    terms = np.exp(-eps * np.arange(trunc)) * basis[:, 0] * basis[:, 1]
    return math.fsum(terms)


def _heat_at_order(eps: float, phi: SampledFunction, x: np.ndarray, order: int) -> np.ndarray:
    """
    O_eps[phi](x) after completing the square in y.

    With tau = e^-eps, alpha = (1 + tau^2)/(2(1 - tau^2)) and y0 = 2 tau x/(1 + tau^2),

        O_eps[phi](x) = C(x)/sqrt(alpha) sum_i w_i phi(y0 + u_i/sqrt(alpha)),
        C(x) = pi^{-1/2} (1 - tau^2)^{-1/2} exp(-x^2 (1 - tau^2)/(2(1 + tau^2))).
    """
    tau = math.exp(-eps)
    one_minus = -math.expm1(-2.0 * eps)
    one_plus = 1.0 + tau * tau
    alpha = one_plus / (2.0 * one_minus)
    rule = gauss_hermite(order)
    y0 = 2.0 * tau * x / one_plus
    samples = np.asarray(phi(y0[:, None] + rule.nodes[None, :] / math.sqrt(alpha)), dtype=complex)
    bad = np.argwhere(~np.isfinite(samples))
    if bad.size:
        i, k = (int(v) for v in bad[0])
        raise NonFiniteIntegrandError(k, float(y0[i] + rule.nodes[k] / math.sqrt(alpha)), samples[i, k])
    products = samples * rule.weights[None, :]
    sums = np.array([complex(math.fsum(row.real), math.fsum(row.imag)) for row in products])
    scale = np.exp(-x ** 2 * one_minus / (2.0 * one_plus)) / math.sqrt(math.pi * one_minus * alpha)
    return scale * sums


def apply_heat(eps: float, phi: Union[SampledFunction, Integrand], x_grid: Sequence[float],
               order: int = None, adequacy_tol: float = None) -> SampledFunction:
    """
    Apply the heat operator O_eps = e^{-eps H} to a function.

    O_eps[phi](x) = int G_eps(x, y) phi(y) dy, evaluated by Gauss-Hermite
    quadrature after the substitution that exposes the e^{-y^2} weight. The
    result is checked against the same computation at a doubled order.

    Args:
        eps: Positive parameter
        phi: Function or callback to smooth
        x_grid: Strictly increasing evaluation points
        order: Gauss-Hermite order (defaults to the configured heat order)
        adequacy_tol: Tolerance of the doubled-order check

    Returns:
        SampledFunction holding O_eps[phi] on x_grid

    Raises:
        QuadratureError: If the doubled-order check fails
    """
    if not (math.isfinite(eps) and eps > 0):
        raise DomainError(f"eps must be positive, got {eps!r}")
    order = DEFAULTS.heat_order if order is None else order
    adequacy_tol = DEFAULTS.adequacy_tol if adequacy_tol is None else adequacy_tol
    phi = as_function(phi)
    x = np.asarray(x_grid, dtype=float)
    coarse_order, fine_order = doubled_order(order)
    coarse = _heat_at_order(eps, phi, x, coarse_order)
    fine = _heat_at_order(eps, phi, x, fine_order)
    check_adequacy(coarse, fine, adequacy_tol, f"heat operator at eps={eps}")
    values = fine if fine_order == order else coarse
    return SampledFunction(grid=x, values=values)


def heat_limit_defects(phi: Union[SampledFunction, Integrand], eps_list: Sequence[float],
                       x_grid: Sequence[float], order: int = None) -> List[float]:
    """
    Sup-norm distance ||O_eps[phi] - phi|| on x_grid along a decreasing eps sequence.

    Args:
        phi: Function or callback
        eps_list: Strictly decreasing positive values
        x_grid: Evaluation points
        order: Gauss-Hermite order

    Returns:
        One defect per eps
    """
    eps_list = [float(e) for e in eps_list]
    if any(not e > 0 for e in eps_list) or any(b >= a for a, b in zip(eps_list, eps_list[1:])):
        raise DomainError("eps_list must be strictly decreasing and positive")
    phi = as_function(phi)
    x = np.asarray(x_grid, dtype=float)
    reference = phi(x)
    defects = []
    for eps in eps_list:
        smoothed = apply_heat(eps, phi, x, order)
        defects.append(float(np.max(np.abs(smoothed.values - reference))))
        logger.debug("heat limit eps=%g: sup defect %.3e", eps, defects[-1])
    return defects
