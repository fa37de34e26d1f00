"""
Bargmann-type transform attached to the epsilon coherent states.

    B_m^eps[phi](z) = N_{m,eps}(z)^{1/2} <phi | z; m, eps>

is computed as int conj(phi(x)) k_z(x) dx, where k_z = N^{1/2} psi_z is the
closed-form wavefunction with its normalization stripped. k_z stays finite
at eps = 0, which gives the limiting transform directly. Every value is
checked against a doubled Gauss-Hermite order before it is returned.
"""
import logging
import math
from typing import Callable, List, Sequence, Union

import numpy as np

from .data_classes import Integrand, PointLike, SampledFunction, TransformSpec, as_complex, as_function
from .exceptions import DomainError, NonFiniteIntegrandError
from .quad import check_adequacy, doubled_order, gauss_hermite, integrate
from .specfun import hermite, laguerre
from .states.wavefunction import unnormalized_kernel

logger = logging.getLogger(__name__)

FunctionLike = Union[SampledFunction, Integrand]
KernelFn = Callable[[np.ndarray, complex], np.ndarray]


def _samples(phi: SampledFunction, nodes: np.ndarray) -> np.ndarray:
    values = np.asarray(phi(nodes), dtype=complex)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        i = int(bad[0])
        raise NonFiniteIntegrandError(i, nodes[i], values[i])
    return values


def _integrate_grid(kernel: KernelFn, phi: FunctionLike, zs: Sequence[complex], order: int,
                    tol: float, conjugate: bool, what: str) -> np.ndarray:
    """
    int s(x) kernel(x, z) dx for every z, with s = conj(phi) or phi.

    phi is sampled once per order and shared by all points; each sum runs
    through quad.integrate.
    """
    phi = as_function(phi)
    zs = [as_complex(z) for z in zs]
    if not zs:
        return np.zeros(0, dtype=complex)
    coarse_order, fine_order = doubled_order(order)
    results = {}
    for q in (coarse_order, fine_order):
        rule = gauss_hermite(q)
        samples = _samples(phi, rule.nodes)
        if conjugate:
            samples = np.conj(samples)
        results[q] = np.array([
            integrate(rule, lambda x, z=z: samples * kernel(x, z), weighted=False) for z in zs
        ])
    check_adequacy(results[coarse_order], results[fine_order], tol, what)
    return results[order] if order in results else results[fine_order]


def transform_grid(spec: TransformSpec, phi: FunctionLike, z_grid: Sequence[PointLike]) -> List[complex]:
    """
    B_m^eps[phi] at every point of a grid.

    Args:
        spec: Transform parameters
        phi: Function or callback on the real line
        z_grid: Points, possibly empty

    Returns:
        One complex value per point, in grid order

    Raises:
        QuadratureError: If the doubled-order check fails
        NonFiniteIntegrandError: If phi is not finite at a node
    """
    values = _integrate_grid(
        lambda x, z: unnormalized_kernel(x, z, spec.m, spec.eps),
        phi, z_grid, spec.quad_order, spec.adequacy_tol, True,
        f"transform m={spec.m} eps={spec.eps}",
    )
    return [complex(v) for v in values]


def transform(spec: TransformSpec, phi: FunctionLike, z: PointLike) -> complex:
    """
    Bargmann-type transform B_m^eps[phi](z) = N^{1/2} <phi | z; m, eps>.

    For the oscillator eigenfunctions,

        B_m^eps[phi_n](z) = conj(Phi_n^m(z)) e^{-n eps/2} / sqrt(pi m! n!).

    spec.eps = 0 gives the eps -> 0+ limit.

    Args:
        spec: Transform parameters
        phi: Function or callback on the real line
        z: Complex point

    Returns:
        The transform value
    """
    return transform_grid(spec, phi, [z])[0]


def _printed_kernel(m: int, eps: float) -> KernelFn:
    a = math.exp(-0.5 * eps) / math.sqrt(2.0)
    prefactor = (-a) ** m / (math.sqrt(math.factorial(m)) * math.pi ** 0.25)

    def kernel(x: np.ndarray, z: complex) -> np.ndarray:
        exponent = -0.5 * x ** 2 + 2.0 * a * x * z - a * a * z * z
        return prefactor * np.exp(exponent) * hermite(m, x - a * z.conjugate() - z / (2.0 * a))

    return kernel


def transform_printed(spec: TransformSpec, phi: FunctionLike, z: PointLike) -> complex:
    """
    The explicit integral with the pi-free prefactor and holomorphic exponent

        (-1)^m e^{-m eps/2} / (2^{m/2} sqrt(m!) pi^{1/4})
            int exp(-x^2/2 + sqrt(2) x z e^{-eps/2} - e^{-eps} z^2/2)
                H_m(x - (e^{-eps/2} conj(z) + e^{eps/2} z)/sqrt(2)) phi(x) dx.

    It agrees with sqrt(pi) * transform for real z and real phi; for m = 0
    and real phi it equals sqrt(pi) * conj(transform).
    """
    return complex(_integrate_grid(
        _printed_kernel(spec.m, spec.eps), phi, [z], spec.quad_order, spec.adequacy_tol, False,
        f"printed transform m={spec.m} eps={spec.eps}",
    )[0])


def bargmann_classical(phi: FunctionLike, z: PointLike, quad_order: int = 96,
                       adequacy_tol: float = 1e-10) -> complex:
    """
    Classical Bargmann transform

        B[phi](z) = pi^{-1/4} int exp(-x^2/2 + sqrt(2) x z - z^2/2) phi(x) dx,

    with B[phi_n](z) = z^n / sqrt(n!).
    """
    def kernel(x: np.ndarray, z: complex) -> np.ndarray:
        return np.exp(-0.5 * x ** 2 + math.sqrt(2.0) * x * z - 0.5 * z * z) / math.pi ** 0.25

    return complex(_integrate_grid(kernel, phi, [z], quad_order, adequacy_tol, False, "classical transform")[0])


def normalized_kernel(m: int, eps: float, z: PointLike, w: PointLike) -> complex:
    """
    Normalized reproducing kernel of the target space, with pi-free conventions

        K_{m,eps}(z, w) = exp(e^-eps z conj(w) - m eps) / sqrt(N'(z) N'(w))
                          L_m^(0)((z e^-eps - w)(conj(z) e^eps - conj(w))),
        N'(z) = exp(e^-eps |z|^2 - m eps) L_m^(0)(2(1 - cosh eps)|z|^2).

    The pi factors cancel in the ratio, so the value equals the state overlap.
    """
    if not (math.isfinite(eps) and eps > 0):
        raise DomainError(f"eps must be positive, got {eps!r}")
    z, w = as_complex(z), as_complex(w)
    decay = math.exp(-eps)

    def log_norm(u: complex) -> float:
        t = 2.0 * (1.0 - math.cosh(eps)) * abs(u) ** 2
        return decay * abs(u) ** 2 - m * eps + math.log(laguerre((m, 0), t).real)

    exponent = decay * z * w.conjugate() - m * eps - 0.5 * (log_norm(z) + log_norm(w))
    arg = (z * decay - w) * (z.conjugate() / decay - w.conjugate())
    return complex(np.exp(exponent) * laguerre((m, 0), arg))


def polyanalytic_defect(spec: TransformSpec, phi: FunctionLike, n_max: int,
                        points: Sequence[PointLike] = None) -> float:
    """
    Least-squares test that conj(B_m^eps[phi]) has conj(z)-degree at most m.

    For phi in the span of phi_0 .. phi_{n_max}, conj(B[phi]) is a polynomial
    in z and conj(z) of z-degree <= n_max and conj(z)-degree <= m. The values
    on the points are fitted with all monomials z^p conj(z)^q, p <= n_max,
    q <= m + 1, and the largest coefficient with q = m + 1 is returned.

    Args:
        spec: Transform parameters
        phi: Function in the span of the first n_max + 1 eigenfunctions
        n_max: Highest eigenfunction index present in phi
        points: Fit points (defaults to a square grid in [-1, 1]^2)

    Returns:
        Largest absolute fitted coefficient of degree m + 1 in conj(z)
    """
    m = spec.m
    n_terms = (n_max + 1) * (m + 2)
    if points is None:
        side = max(7, int(math.ceil(math.sqrt(3 * n_terms))))
        axis = np.linspace(-1.0, 1.0, side)
        points = (axis[None, :] + 1j * axis[:, None]).ravel()
    zs = np.array([as_complex(p) for p in points])
    if len(zs) < n_terms:
        raise DomainError(f"need at least {n_terms} fit points, got {len(zs)}")
    values = np.conj(np.array(transform_grid(spec, phi, zs)))
    powers = [np.ones_like(zs)]
    for _ in range(max(n_max, m + 1)):
        powers.append(powers[-1] * zs)
    columns = [(p, q) for q in range(m + 2) for p in range(n_max + 1)]
    design = np.stack([powers[p] * np.conj(powers[q]) for p, q in columns], axis=1)
    coef, *_ = np.linalg.lstsq(design, values, rcond=None)
    top = [abs(c) for (p, q), c in zip(columns, coef) if q == m + 1]
    logger.debug("polyanalytic fit m=%d n_max=%d: top coefficient %.3e", m, n_max, max(top))
    return float(max(top))
