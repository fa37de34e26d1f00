"""
Special functions: Laguerre and Hermite polynomials, oscillator eigenfunctions,
logarithmic factorials, and the classical identities built from them.

All functions accept scalars or numpy arrays for the continuous argument and
return a float/complex for scalar input, an array otherwise.
"""
import math
from functools import lru_cache
from typing import Any, Tuple, Union

import numpy as np
from scipy.special import gammaln

from .config import DEFAULTS
from .data_classes import PolyIndex
from .exceptions import DomainError


# ln(n!) is tabulated exactly (from the integer factorial) below this size
LOG_FACTORIAL_TABLE_SIZE = 1024

IndexLike = Union[PolyIndex, Tuple[int, float]]


def _as_index(idx: IndexLike) -> PolyIndex:
    if isinstance(idx, PolyIndex):
        return idx
    degree, superscript = idx
    return PolyIndex(degree, superscript)


def _as_array(x: Any, name: str, allow_complex: bool = False) -> Tuple[np.ndarray, bool]:
    """Convert input to an array, checking finiteness. Returns (array, was_scalar)."""
    arr = np.asarray(x)
    if not allow_complex and np.iscomplexobj(arr):
        raise DomainError(f"{name} must be real")
    if arr.dtype.kind not in "fc":
        arr = arr.astype(float)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} must be finite")
    return arr, arr.ndim == 0


def _unwrap(result: np.ndarray, scalar: bool):
    if scalar:
        value = result[()]
        return complex(value) if np.iscomplexobj(result) else float(value)
    return result


@lru_cache(maxsize=LOG_FACTORIAL_TABLE_SIZE)
def _log_factorial_exact(n: int) -> float:
    return math.log(math.factorial(n))


def log_factorial(n: Any):
    """
    Natural logarithm of n!.

    Small arguments come from the exact integer factorial, larger ones from
    scipy's log-gamma.

    Args:
        n: Nonnegative integer or integer array

    Returns:
        ln(n!) as a float, or an array of the same shape
    """
    arr = np.asarray(n)
    if arr.dtype.kind not in "iu" and not np.all(arr == np.floor(arr)):
        raise DomainError("log_factorial needs integer arguments")
    if np.any(arr < 0):
        raise DomainError("log_factorial needs nonnegative arguments")
    if arr.ndim == 0:
        k = int(arr)
        if k < LOG_FACTORIAL_TABLE_SIZE:
            return _log_factorial_exact(k)
        return float(gammaln(k + 1))
    return gammaln(arr.astype(float) + 1.0)


def _laguerre_recurrence(n: int, alpha: float, t: np.ndarray) -> np.ndarray:
    """Ascending three-term recurrence in the degree at fixed superscript."""
    prev = np.ones_like(t)
    if n == 0:
        return prev
    curr = 1.0 + alpha - t
    for k in range(1, n):
        prev, curr = curr, ((2 * k + 1 + alpha - t) * curr - (k + alpha) * prev) / (k + 1)
    return curr


def laguerre(idx: IndexLike, t: Any):
    """
    Generalized Laguerre polynomial L_degree^(superscript)(t).

    Nonnegative superscripts use the three-term recurrence in the degree. A
    negative integer superscript -k (1 <= k <= degree) is reduced with

        L_m^(-k)(t) = (-t)^k (m-k)!/m! L_{m-k}^(k)(t).

    Args:
        idx: PolyIndex or (degree, superscript) pair
        t: Real or complex argument(s)

    Returns:
        Polynomial value(s)

    Raises:
        DomainError: For an invalid index or non-finite argument
    """
    idx = _as_index(idx)
    t_arr, scalar = _as_array(t, "t", allow_complex=True)
    n, alpha = idx.degree, idx.superscript
    if idx.is_negative:
        k = int(-alpha)
        ratio = math.exp(log_factorial(n - k) - log_factorial(n))
        result = (-t_arr) ** k * ratio * _laguerre_recurrence(n - k, float(k), t_arr)
    else:
        result = _laguerre_recurrence(n, float(alpha), t_arr)
    return _unwrap(np.asarray(result), scalar)


def laguerre_explicit(idx: IndexLike, t: Any):
    """
    Laguerre polynomial from its explicit sum.

    The generalized binomial C(n+alpha, n-j) is written as the falling
    product prod_{i=j+1}^{n} (alpha+i) / (n-j)!, which is a polynomial in
    alpha and therefore also covers negative integer superscripts. Used as an
    oracle only: the sum cancels badly once t exceeds the degree.

    Args:
        idx: PolyIndex or (degree, superscript) pair
        t: Real argument(s)

    Returns:
        Polynomial value(s)
    """
    idx = _as_index(idx)
    t_arr, scalar = _as_array(t, "t")
    n, alpha = idx.degree, float(idx.superscript)
    total = np.zeros_like(t_arr, dtype=float)
    for j in range(n + 1):
        binom = 1.0
        for i in range(j + 1, n + 1):
            binom *= alpha + i
        binom /= math.factorial(n - j)
        total = total + (-1) ** j * binom * t_arr ** j / math.factorial(j)
    return _unwrap(total, scalar)


def hermite(n: int, x: Any):
    """
    Physicists' Hermite polynomial H_n(x).

    Evaluated by H_{k+1} = 2x H_k - 2k H_{k-1}; the recurrence is entire in x,
    so complex arguments are accepted.

    Args:
        n: Nonnegative degree
        x: Real or complex argument(s)

    Returns:
        H_n(x)
    """
    if int(n) != n or n < 0:
        raise DomainError(f"Hermite degree must be a nonnegative integer, got {n!r}")
    x_arr, scalar = _as_array(x, "x", allow_complex=True)
    prev = np.ones_like(x_arr)
    if n == 0:
        return _unwrap(prev, scalar)
    curr = 2.0 * x_arr
    for k in range(1, int(n)):
        prev, curr = curr, 2.0 * x_arr * curr - 2.0 * k * prev
    return _unwrap(curr, scalar)


def hermite_explicit(n: int, x: Any):
    """H_n(x) from the explicit sum sum_k (-1)^k n!/(k!(n-2k)!) (2x)^(n-2k)."""
    x_arr, scalar = _as_array(x, "x", allow_complex=True)
    total = np.zeros_like(x_arr, dtype=x_arr.dtype)
    for k in range(n // 2 + 1):
        coeff = (-1) ** k * math.factorial(n) // (math.factorial(k) * math.factorial(n - 2 * k))
        total = total + coeff * (2.0 * x_arr) ** (n - 2 * k)
    return _unwrap(total, scalar)


def ho_eigenfunctions(n_max: int, x: Any) -> np.ndarray:
    """
    Oscillator eigenfunctions phi_0 .. phi_{n_max} at once.

    Uses the normalized recurrence
        phi_{k+1} = sqrt(2/(k+1)) x phi_k - sqrt(k/(k+1)) phi_{k-1},
    starting from phi_0 = pi^{-1/4} e^{-x^2/2}; 2^n n! is never formed.

    Args:
        n_max: Highest order
        x: Real point(s)

    Returns:
        Array of shape (n_max + 1,) + shape(x)
    """
    if int(n_max) != n_max or n_max < 0:
        raise DomainError(f"n_max must be a nonnegative integer, got {n_max!r}")
    x_arr, _ = _as_array(x, "x")
    out = np.empty((int(n_max) + 1,) + x_arr.shape, dtype=float)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x_arr ** 2)
    if n_max >= 1:
        out[1] = math.sqrt(2.0) * x_arr * out[0]
    for k in range(1, int(n_max)):
        out[k + 1] = math.sqrt(2.0 / (k + 1)) * x_arr * out[k] - math.sqrt(k / (k + 1)) * out[k - 1]
    return out


def ho_eigenfunction(n: int, x: Any):
    """
    Normalized oscillator eigenfunction
        phi_n(x) = (sqrt(pi) 2^n n!)^{-1/2} H_n(x) e^{-x^2/2}.

    Args:
        n: Nonnegative order
        x: Real point(s)

    Returns:
        phi_n(x)
    """
    if int(n) != n or n < 0:
        raise DomainError(f"order must be a nonnegative integer, got {n!r}")
    x_arr, scalar = _as_array(x, "x")
    prev = np.pi ** -0.25 * np.exp(-0.5 * x_arr ** 2)
    if n == 0:
        return _unwrap(prev, scalar)
    curr = math.sqrt(2.0) * x_arr * prev
    for k in range(1, int(n)):
        prev, curr = curr, math.sqrt(2.0 / (k + 1)) * x_arr * curr - math.sqrt(k / (k + 1)) * prev
    return _unwrap(curr, scalar)


def deruyts_partial_sum(m: int, s: float, alpha: float, trunc: int) -> float:
    """
    Partial sum sum_{n=0}^{trunc} (s alpha)^n / n! L_m^(n-m)(s).

    Terms with n < m use the negative-superscript reduction.
    """
    terms = []
    weight = 1.0
    for n in range(trunc + 1):
        if n > 0:
            weight *= s * alpha / n
        terms.append(weight * laguerre((m, n - m), s))
    return math.fsum(terms)


def deruyts_closed(m: int, s: float, alpha: float) -> float:
    """Closed form s^m/m! (alpha-1)^m e^{s alpha} of the Deruyts sum."""
    return s ** m / math.factorial(m) * (alpha - 1.0) ** m * math.exp(s * alpha)


def meixner_partial_sum(m: int, zeta: float, x: float, y: float, trunc: int) -> float:
    """Partial sum sum_{n=0}^{trunc} zeta^n/n! L_m^(n-m)(x) L_m^(n-m)(y)."""
    terms = []
    weight = 1.0
    for n in range(trunc + 1):
        if n > 0:
            weight *= zeta / n
        terms.append(weight * laguerre((m, n - m), x) * laguerre((m, n - m), y))
    return math.fsum(terms)


def meixner_closed(m: int, zeta: float, x: float, y: float) -> float:
    """
    Wicksell-Campbell-Meixner closed form with equal degrees:
        e^zeta zeta^m/m! L_m^(0)(-(x-zeta)(y-zeta)/zeta).
    """
    if zeta == 0:
        raise DomainError("zeta must be nonzero")
    arg = -(x - zeta) * (y - zeta) / zeta
    return math.exp(zeta) * zeta ** m / math.factorial(m) * laguerre((m, 0), arg)


def hermite_integral(p: int, x: Any, order: int = None):
    """
    H_p(x) from its Fourier-type integral representation
        H_p(x) = e^{x^2}/sqrt(pi) int (2iu)^p e^{-2iux} e^{-u^2} du,
    evaluated by Gauss-Hermite quadrature in u.

    Args:
        p: Degree
        x: Real point(s)
        order: Gauss-Hermite order (defaults to the configured one)

    Returns:
        Complex value(s); the imaginary part vanishes up to rounding
    """
    from .quad import gauss_hermite

    order = DEFAULTS.hermite_integral_order if order is None else order
    x_arr, scalar = _as_array(x, "x")
    rule = gauss_hermite(order)
    u = rule.nodes
    integrand = (2j * u) ** p * np.exp(-2j * np.outer(x_arr.ravel(), u))
    values = integrand @ rule.weights
    result = (np.exp(x_arr.ravel() ** 2) / math.sqrt(math.pi) * values).reshape(x_arr.shape)
    return _unwrap(result, scalar)
