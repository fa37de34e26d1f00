"""
Epsilon coherent states with polyanalytic coefficients: normalization,
coefficient vectors, overlaps and the thermal shift.
"""
import logging
import math
from typing import Any, List, Sequence, Tuple

import numpy as np

from ..config import DEFAULTS
from ..data_classes import CoefficientVector, KernelEval, PointLike, StateLabel, as_complex
from ..exceptions import DomainError, NumericalDomainError
from ..polyfock import kernel_series, phi_series, reproducing_kernel
from ..specfun import laguerre

logger = logging.getLogger(__name__)

_LOG_PI = math.log(math.pi)


def _check_eps(eps: float, allow_zero: bool = False) -> float:
    eps = float(eps)
    ok = eps >= 0 if allow_zero else eps > 0
    if not (math.isfinite(eps) and ok):
        bound = ">= 0" if allow_zero else "> 0"
        raise DomainError(f"eps must be {bound}, got {eps!r}")
    return eps


def _normalization_poly(z: Any, m: int, eps: float):
    """L_m^(0)(2(1 - cosh eps)|z|^2), with 1 - cosh eps = -2 sinh^2(eps/2)."""
    t = -4.0 * math.sinh(0.5 * eps) ** 2 * np.abs(np.asarray(z, dtype=complex)) ** 2
    return np.real(laguerre((m, 0), t))


def log_normalization_at(z: Any, m: int, eps: float):
    """
    ln N_{m,eps}(z) for eps >= 0 and one or many points.

    eps = 0 gives ln(pi^-1 e^{|z|^2}), the limit used by the transform.

    Raises:
        NumericalDomainError: If the Laguerre factor is not positive
    """
    eps = _check_eps(eps, allow_zero=True)
    z_arr = np.asarray(z, dtype=complex)
    poly = _normalization_poly(z_arr, m, eps)
    invalid = ~(np.isfinite(poly) & (poly > 0))
    if np.any(invalid):
        bad = complex(z_arr.ravel()[int(np.flatnonzero(invalid.ravel())[0])])
        raise NumericalDomainError(
            f"normalization is not positive at z={bad!r} (m={m}, eps={eps})",
            {"m": m, "eps": eps, "z": bad},
        )
    value = -_LOG_PI + math.exp(-eps) * np.abs(z_arr) ** 2 - m * eps + np.log(poly)
    return float(value) if z_arr.ndim == 0 else value


def log_normalization(label: StateLabel) -> float:
    """Natural logarithm of the normalization factor of a state."""
    return log_normalization_at(label.z, label.m, label.eps)


def normalization(label: StateLabel) -> float:
    """
    Normalization factor

        N_{m,eps}(z) = pi^-1 exp(e^-eps |z|^2 - m eps) L_m^(0)(2(1 - cosh eps)|z|^2).

    The Laguerre argument is negative, where the polynomial is positive; the
    positivity is checked anyway.

    Args:
        label: State label

    Returns:
        The (positive) normalization factor

    Raises:
        NumericalDomainError: If the factor is not positive or overflows
    """
    value = log_normalization(label)
    if value > 709.0:
        raise NumericalDomainError(
            f"normalization overflows (log value {value:.3f}); use log_normalization",
            {"m": label.m, "eps": label.eps, "z": label.z},
        )
    return math.exp(value)


def truncation_order(label: StateLabel, margin: int = None) -> int:
    """
    Number of coefficients that leaves a negligible tail:
    ceil(e |z|^2 e^-eps) + m + margin.
    """
    margin = DEFAULTS.truncation_margin if margin is None else margin
    return int(math.ceil(math.e * abs(label.z) ** 2 * math.exp(-label.eps))) + label.m + int(margin)


def coefficients(label: StateLabel, trunc: int = None) -> CoefficientVector:
    """
    Coefficients c_n = conj(Phi_n^m(z)) / sqrt(sigma_{m,eps}(n) N_{m,eps}(z)).

    Computed as conj(phi_normalized) e^{-(n eps + ln N)/2}, so no factorial
    or exponential is formed on its own.

    Args:
        label: State label
        trunc: Number of coefficients (defaults to truncation_order(label))

    Returns:
        CoefficientVector with tail_mass = 1 - sum |c_n|^2
    """
    trunc = truncation_order(label) if trunc is None else trunc
    if int(trunc) != trunc or trunc < 1:
        raise DomainError(f"trunc must be a positive integer, got {trunc!r}")
    trunc = int(trunc)
    log_norm = log_normalization(label)
    damping = np.exp(-0.5 * (label.eps * np.arange(trunc) + log_norm))
    entries = np.conj(phi_series(label.m, label.z, trunc)) * damping
    vector = CoefficientVector(label, trunc, entries, 0.0)
    tail = 1.0 - vector.norm_squared
    logger.debug("coefficients for %s: trunc=%d tail=%.3e", label, trunc, tail)
    return CoefficientVector(label, trunc, entries, tail)


def _overlap_value(z: complex, w: complex, m: int, eps: float) -> complex:
    """
    Normalized overlap with the pi and e^{-m eps} factors cancelled.

    With p = z conj(w) the exponent is e^-eps (p - (|z|^2 + |w|^2)/2) and the
    Laguerre argument is |z|^2 + |w|^2 - (e^-eps p + e^eps conj(p)); both are
    written so that swapping z and w conjugates them exactly.
    """
    p = z * w.conjugate()
    sq = abs(z) ** 2 + abs(w) ** 2
    arg = sq - (math.exp(-eps) * p + math.exp(eps) * p.conjugate())
    log_polys = math.log(_normalization_poly(z, m, eps)) + math.log(_normalization_poly(w, m, eps))
    exponent = math.exp(-eps) * (p - 0.5 * sq) - 0.5 * log_polys
    return complex(np.exp(exponent) * laguerre((m, 0), arg))


def overlap(z: PointLike, w: PointLike, m: int, eps: float) -> KernelEval:
    """
    Overlap <z; m, eps | w; m, eps> in closed form

        pi^-1 exp(e^-eps z conj(w) - m eps) L_m^(0)((z e^-eps - w)(conj(z) e^eps - conj(w)))
        / sqrt(N(z) N(w)).

    Args:
        z, w: Complex points
        m: Landau level
        eps: Positive parameter

    Returns:
        KernelEval of kind "overlap"
    """
    z, w = as_complex(z), as_complex(w)
    label = StateLabel(z, m, eps)
    # positivity check of both normalizations
    log_normalization(label)
    log_normalization(StateLabel(w, m, eps))
    value = _overlap_value(z, w, m, label.eps)
    return KernelEval(value, "overlap", {"z": z, "w": w, "m": m, "eps": label.eps})


def overlap_series(z: PointLike, w: PointLike, m: int, eps: float, trunc: int = None) -> complex:
    """
    Truncated series sum_n e^{-n eps} Phi_n^m(z) conj(Phi_n^m(w)) / (pi m! n! sqrt(N(z) N(w))).

    This is the independent oracle for overlap().
    """
    z, w = as_complex(z), as_complex(w)
    if trunc is None:
        trunc = max(truncation_order(StateLabel(z, m, eps)), truncation_order(StateLabel(w, m, eps)))
    partial = kernel_series(m, z, w, trunc, eps)
    log_norms = log_normalization(StateLabel(z, m, eps)) + log_normalization(StateLabel(w, m, eps))
    return partial * math.exp(-0.5 * log_norms)


def normalized_reproducing_kernel(m: int, z: PointLike, w: PointLike) -> complex:
    """K_m(z, w) / sqrt(K_m(z, z) K_m(w, w))."""
    z, w = as_complex(z), as_complex(w)
    diag = reproducing_kernel(m, z, z).real * reproducing_kernel(m, w, w).real
    return reproducing_kernel(m, z, w) / math.sqrt(diag)


def overlap_limit_defect(z: PointLike, w: PointLike, m: int,
                         eps_sequence: Sequence[float]) -> List[float]:
    """
    Distance between the overlap and the normalized reproducing kernel as eps -> 0+.

    Args:
        z, w: Complex points
        m: Landau level
        eps_sequence: Strictly decreasing positive values

    Returns:
        |overlap - K_m(z,w)/sqrt(K_m(z,z) K_m(w,w))| for each eps
    """
    eps_sequence = [_check_eps(e) for e in eps_sequence]
    if any(b >= a for a, b in zip(eps_sequence, eps_sequence[1:])):
        raise DomainError("eps_sequence must be strictly decreasing")
    limit = normalized_reproducing_kernel(m, z, w)
    return [abs(overlap(z, w, m, eps).value - limit) for eps in eps_sequence]


def thermal_shift(label: StateLabel, t: float) -> Tuple[float, StateLabel]:
    """
    Action of the heat semigroup e^{-tH/2} on a state.

    Scaling the coefficients by e^{-nt/2} gives scale times the coefficients
    of the state at eps + t, with scale = sqrt(N_{m,eps+t}(z) / N_{m,eps}(z)).

    Args:
        label: State label
        t: Positive shift

    Returns:
        (scale, shifted label)
    """
    if not (math.isfinite(t) and t > 0):
        raise DomainError(f"t must be positive, got {t!r}")
    shifted = label.shifted(t)
    scale = math.exp(0.5 * (log_normalization(shifted) - log_normalization(label)))
    return scale, shifted
