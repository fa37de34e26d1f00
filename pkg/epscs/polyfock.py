"""
Polyanalytic basis functions of the true polyanalytic Fock space at level m,
their normalization sequence and reproducing kernel.

Phi_n^m is evaluated in its single-valued form

    n >= m:  (-1)^m m! z^(n-m) L_m^(n-m)(|z|^2)
    m >  n:  (-1)^n n! conj(z)^(m-n) L_n^(m-n)(|z|^2)

so the origin needs no argument of zero. Inner products are conjugate-linear
in the first slot.
"""
import logging
import math
from typing import Any, Tuple, Union

import numpy as np

from .config import DEFAULTS
from .data_classes import LevelIndex, QuadratureRule
from .exceptions import DomainError, NumericalDomainError
from .quad import check_polar_rule, integrate
from .specfun import laguerre, log_factorial

logger = logging.getLogger(__name__)

LevelLike = Union[LevelIndex, Tuple[int, int]]

# Largest log value exp() can take without overflowing a double
_LOG_MAX = 709.0


def _as_level(level: LevelLike) -> LevelIndex:
    if isinstance(level, LevelIndex):
        return level
    m, n = level
    return LevelIndex(m, n)


def _as_points(z: Any) -> Tuple[np.ndarray, bool]:
    arr = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError("complex points must be finite")
    return arr, arr.ndim == 0


def _unwrap(result: np.ndarray, scalar: bool):
    return complex(result[()]) if scalar else result


def phi(level: LevelLike, z: Any):
    """
    Polyanalytic basis function Phi_n^m(z).

    Args:
        level: LevelIndex or (m, n) pair
        z: Complex point(s)

    Returns:
        Complex value(s)

    Example:
        >>> phi((2, 1), 1.0)
        (-1+0j)
    """
    level = _as_level(level)
    z_arr, scalar = _as_points(z)
    m, n = level.m, level.n
    lo, gap = level.lower, level.gap
    base = z_arr if n >= m else np.conj(z_arr)
    monomial = np.ones_like(z_arr)
    for _ in range(gap):
        monomial = monomial * base
    value = (-1) ** lo * math.factorial(lo) * monomial * laguerre((lo, gap), np.abs(z_arr) ** 2)
    return _unwrap(np.asarray(value, dtype=complex), scalar)


def phi_normalized(level: LevelLike, z: Any):
    """
    Phi_n^m(z) / sqrt(pi m! n!).

    The ratio sqrt(lower!/upper!) and the monomial are accumulated together
    as a running product of z/sqrt(i), so nothing overflows for large n.

    Args:
        level: LevelIndex or (m, n) pair
        z: Complex point(s)

    Returns:
        Complex value(s)
    """
    level = _as_level(level)
    z_arr, scalar = _as_points(z)
    m, n = level.m, level.n
    lo, gap = level.lower, level.gap
    base = z_arr if n >= m else np.conj(z_arr)
    prod = np.ones_like(z_arr)
    for i in range(lo + 1, lo + gap + 1):
        prod = prod * base / math.sqrt(i)
    poly = laguerre((lo, gap), np.abs(z_arr) ** 2)
    value = (-1) ** lo * prod * poly / math.sqrt(math.pi)
    return _unwrap(np.asarray(value, dtype=complex), scalar)


def phi_series(m: int, z: Any, trunc: int) -> np.ndarray:
    """
    Stack phi_normalized for n = 0 .. trunc-1.

    Returns:
        Array of shape (trunc,) + shape(z)
    """
    if int(trunc) != trunc or trunc < 1:
        raise DomainError(f"trunc must be a positive integer, got {trunc!r}")
    z_arr, _ = _as_points(z)
    out = np.empty((int(trunc),) + z_arr.shape, dtype=complex)
    for n in range(int(trunc)):
        out[n] = phi_normalized((m, n), z_arr)
    return out


def log_sigma(m: int, eps: float, n: int) -> float:
    """
    ln sigma_{m,eps}(n) = ln(pi) + ln(m!) + ln(n!) + n eps.

    eps = 0 is admitted for limit studies.
    """
    LevelIndex(m, n)
    if not (math.isfinite(eps) and eps >= 0):
        raise DomainError(f"eps must be nonnegative, got {eps!r}")
    return math.log(math.pi) + log_factorial(m) + log_factorial(n) + n * eps


def sigma(m: int, eps: float, n: int) -> float:
    """
    Normalization sequence sigma_{m,eps}(n) = pi m! n! e^(n eps).

    Raises:
        NumericalDomainError: If the value overflows; use log_sigma instead
    """
    value = log_sigma(m, eps, n)
    if value > _LOG_MAX:
        raise NumericalDomainError(
            f"sigma overflows (log value {value:.3f}); use log_sigma",
            {"m": m, "eps": eps, "n": n},
        )
    return math.exp(value)


def reproducing_kernel(m: int, z: Any, w: Any):
    """
    Reproducing kernel K_m(z, w) = pi^-1 e^(z conj(w)) L_m^(0)(|z - w|^2).

    Evaluated so that swapping z and w conjugates the result exactly.

    Args:
        m: Landau level
        z, w: Complex point(s), broadcast together

    Returns:
        Complex value(s)
    """
    LevelIndex(m, 0)
    z_arr, z_scalar = _as_points(z)
    w_arr, w_scalar = _as_points(w)
    z_arr, w_arr = np.broadcast_arrays(z_arr, w_arr)
    # z conj(w) component-wise; swapping z and w negates the imaginary part exactly
    re = z_arr.real * w_arr.real + z_arr.imag * w_arr.imag
    im = z_arr.imag * w_arr.real - z_arr.real * w_arr.imag
    scale = np.exp(re) * laguerre((m, 0), np.abs(z_arr - w_arr) ** 2) / math.pi
    value = np.empty(re.shape, dtype=complex)
    value.real = scale * np.cos(np.abs(im))
    value.imag = np.sign(im) * scale * np.sin(np.abs(im))
    return _unwrap(value, z_scalar and w_scalar)


def kernel_series(m: int, z: Any, w: Any, trunc: int = None, eps: float = 0.0) -> complex:
    """
    Partial sum sum_{n<trunc} e^(-n eps) Phi_n^m(z) conj(Phi_n^m(w)) / (pi m! n!).

    With eps = 0 this converges to reproducing_kernel(m, z, w).

    Args:
        m: Landau level
        z, w: Complex points
        trunc: Number of terms (defaults to the configured kernel truncation)
        eps: Damping parameter, >= 0

    Returns:
        The partial sum
    """
    trunc = DEFAULTS.kernel_series_trunc if trunc is None else trunc
    if not (math.isfinite(eps) and eps >= 0):
        raise DomainError(f"eps must be nonnegative, got {eps!r}")
    pz = phi_series(m, complex(z), trunc)
    pw = phi_series(m, complex(w), trunc)
    terms = np.exp(-eps * np.arange(trunc)) * pz * np.conj(pw)
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def basis_inner_product(m: int, n: int, j: int, rule: QuadratureRule) -> complex:
    """
    <Phi_n^m | Phi_j^m> = int Phi_j^m conj(Phi_n^m) e^(-|z|^2) dmu(z).

    Expected value: pi m! n! when n == j, else 0.

    Args:
        m: Landau level
        n, j: Basis indices
        rule: Polar rule

    Returns:
        The quadrature value

    Raises:
        QuadratureError: If the rule cannot integrate this family exactly
    """
    check_polar_rule(rule, max(n, j), m)
    return integrate(rule, lambda nodes: phi((m, j), nodes) * np.conj(phi((m, n), nodes)))


def gram_matrix(m: int, n_max: int, rule: QuadratureRule) -> np.ndarray:
    """
    Gram matrix G[n][j] = <Phi_n^m | Phi_j^m> for n, j <= n_max.

    The basis is evaluated once on the rule's nodes.

    Returns:
        Complex array of shape (n_max + 1, n_max + 1)
    """
    check_polar_rule(rule, n_max, m)
    values = [phi((m, n), rule.nodes) for n in range(n_max + 1)]
    gram = np.empty((n_max + 1, n_max + 1), dtype=complex)
    for n in range(n_max + 1):
        for j in range(n_max + 1):
            product = values[j] * np.conj(values[n])
            gram[n, j] = integrate(rule, lambda _nodes, p=product: p)
    logger.debug("Gram matrix for m=%d, n_max=%d on %d nodes", m, n_max, len(rule))
    return gram
