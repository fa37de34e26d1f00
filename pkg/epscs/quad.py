"""
Quadrature rules and the integration driver.

Two rule families are provided: Gauss-Hermite on the real line and a polar
product rule on the complex plane (Gauss-Laguerre in t = |z|^2 times the
uniform trapezoid in arg z). Every reduction goes through math.fsum in
ascending node order, so results do not depend on how the integrand was
evaluated.
"""
import logging
import math
from functools import lru_cache
from typing import Tuple

import numpy as np
from numpy.polynomial.hermite import hermgauss
from numpy.polynomial.laguerre import laggauss

from .config import DEFAULTS
from .data_classes import Integrand, QuadratureRule
from .exceptions import DomainError, NonFiniteIntegrandError, QuadratureError

logger = logging.getLogger(__name__)


def _check_order(name: str, value: int, upper: int = None) -> int:
    if int(value) != value or value < 1:
        raise DomainError(f"{name} must be a positive integer, got {value!r}")
    if upper is not None and value > upper:
        raise DomainError(f"{name} must be at most {upper}, got {value}")
    return int(value)


@lru_cache(maxsize=64)
def gauss_hermite(order: int) -> QuadratureRule:
    """
    Gauss-Hermite rule for int f(x) e^{-x^2} dx.

    Exact for polynomials of degree <= 2*order - 1; the weights sum to
    sqrt(pi). ``scaled_weights`` (w_i e^{x_i^2}) are formed in the log domain;
    weights that underflow contribute zero.

    Args:
        order: Number of nodes, 1 <= order <= 512

    Returns:
        An immutable QuadratureRule of kind "real-hermite"
    """
    order = _check_order("order", order, DEFAULTS.max_hermite_order)
    nodes, weights = hermgauss(order)
    with np.errstate(divide="ignore", over="ignore"):
        scaled = np.exp(nodes ** 2 + np.log(weights))
    scaled[weights == 0] = 0.0
    logger.debug("Gauss-Hermite rule of order %d, largest node %.3f", order, nodes[-1])
    return QuadratureRule("real-hermite", nodes, weights, order, None, scaled)


@lru_cache(maxsize=32)
def polar_rule(radial_order: int, angular_order: int) -> QuadratureRule:
    """
    Product rule for int_C g(z) e^{-|z|^2} dmu(z).

    With t = |z|^2 the integral is 1/2 int_0^inf e^{-t} int_0^{2pi}
    g(sqrt(t) e^{i theta}) dtheta dt: Gauss-Laguerre in t (exact for degree
    <= 2*radial_order - 1) times the uniform trapezoid in theta (exact for
    angular frequencies below angular_order). Nodes run radial-major.

    Args:
        radial_order: Gauss-Laguerre order in |z|^2
        angular_order: Number of equispaced angles

    Returns:
        An immutable QuadratureRule of kind "complex-polar"; weights sum to pi
    """
    radial_order = _check_order("radial_order", radial_order)
    angular_order = _check_order("angular_order", angular_order)
    t, wt = laggauss(radial_order)
    theta = 2.0 * np.pi * np.arange(angular_order) / angular_order
    nodes = (np.sqrt(t)[:, None] * np.exp(1j * theta)[None, :]).ravel()
    weights = np.repeat(np.pi * wt / angular_order, angular_order)
    logger.debug("polar rule %d x %d (%d nodes)", radial_order, angular_order, len(nodes))
    return QuadratureRule("complex-polar", nodes, weights, radial_order, angular_order)


def integrate(rule: QuadratureRule, f: Integrand, weighted: bool = True) -> complex:
    """
    Apply a rule to an integrand.

    The integrand is called once with the full node array and must return
    one value per node. The sum runs in ascending node index with math.fsum
    on real and imaginary parts separately.

    Args:
        rule: Quadrature rule
        f: Vectorized integrand callback
        weighted: For Hermite rules, False integrates f dx using the scaled
            weights instead of f e^{-x^2} dx

    Returns:
        The integral as a complex number

    Raises:
        NonFiniteIntegrandError: If f is NaN or infinite at some node
    """
    values = np.asarray(f(rule.nodes))
    if values.shape != (len(rule),):
        raise QuadratureError(
            f"integrand returned shape {values.shape}, expected ({len(rule)},)"
        )
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        i = int(bad[0])
        raise NonFiniteIntegrandError(i, rule.nodes[i], values[i])
    if weighted:
        weights = rule.weights
    else:
        if rule.scaled_weights is None:
            raise QuadratureError("unweighted integration needs a Gauss-Hermite rule")
        weights = rule.scaled_weights
    products = weights * values
    return complex(math.fsum(np.real(products)), math.fsum(np.imag(products)))


def required_polar_orders(n_max: int, m: int) -> Tuple[int, int]:
    """
    Polar orders needed for integrands Phi_j^m conj(Phi_n^m), n, j <= n_max.

    The radial part is a polynomial of degree <= n_max + m in |z|^2, and the
    angular frequency is j - n. The requirement asks for radial degree
    2(n_max + m) and angular order above 2 n_max.

    Returns:
        (radial_order, angular_order)
    """
    return n_max + m + 1, 2 * n_max + 1


def check_polar_rule(rule: QuadratureRule, n_max: int, m: int) -> None:
    """
    Raise if a polar rule is too small for the Gram/identity integrand family.

    Raises:
        QuadratureError: Naming the required radial and angular orders
    """
    if rule.kind != "complex-polar":
        raise QuadratureError(f"expected a complex-polar rule, got {rule.kind}")
    radial, angular = required_polar_orders(n_max, m)
    if rule.radial_order < radial or rule.angular_order < angular:
        raise QuadratureError(
            f"polar rule {rule.radial_order}x{rule.angular_order} is too small for "
            f"n_max={n_max}, m={m}: needs radial_order >= {radial} "
            f"(radial degree {2 * (n_max + m)}) and angular_order >= {angular}"
        )


def doubled_order(order: int) -> Tuple[int, int]:
    """
    Orders used by the doubled-order self-check.

    Returns:
        (coarse, fine); when 2*order exceeds the Hermite limit the coarse
        order is halved instead
    """
    upper = DEFAULTS.max_hermite_order
    if 2 * order <= upper:
        return order, 2 * order
    return max(1, order // 2), order


def check_adequacy(coarse: np.ndarray, fine: np.ndarray, tol: float, what: str) -> float:
    """
    Compare a result at two quadrature orders.

    Args:
        coarse: Result at the lower order
        fine: Result at the higher order
        tol: Relative tolerance, scaled by max(1, |fine|)
        what: Description used in the error message

    Returns:
        The largest scaled difference

    Raises:
        QuadratureError: If the difference exceeds tol
    """
    coarse = np.atleast_1d(np.asarray(coarse))
    fine = np.atleast_1d(np.asarray(fine))
    if coarse.size == 0:
        return 0.0
    delta = float(np.max(np.abs(coarse - fine) / np.maximum(1.0, np.abs(fine))))
    logger.debug("adequacy check for %s: delta=%.3e (tol %.1e)", what, delta, tol)
    if not delta <= tol:
        raise QuadratureError(
            f"quadrature inadequate for {what}: doubled-order change {delta:.3e} exceeds {tol:.1e}"
        )
    return delta
