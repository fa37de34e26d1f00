"""
Matrix form of the epsilon-identity operator and its eps -> 0+ limit.
"""
import logging
import math
from typing import Sequence, Tuple

import numpy as np

from ..config import DEFAULTS
from ..data_classes import QuadratureRule, VerificationReport
from ..exceptions import DomainError
from ..polyfock import phi_normalized
from ..quad import check_polar_rule, integrate, polar_rule

logger = logging.getLogger(__name__)

# Slack allowed when checking that a defect sequence does not increase
MONOTONE_SLACK = 1e-12


def _default_rule(rule: QuadratureRule = None) -> QuadratureRule:
    if rule is None:
        return polar_rule(DEFAULTS.polar_radial_order, DEFAULTS.polar_angular_order)
    return rule


def _rule_params(rule: QuadratureRule) -> dict:
    return {"radial_order": rule.radial_order, "angular_order": rule.angular_order}


def identity_matrix(m: int, eps: float, n_max: int,
                    rule: QuadratureRule = None) -> Tuple[np.ndarray, VerificationReport]:
    """
    Matrix of the epsilon-identity operator in the oscillator eigenbasis.

    M[n][j] = int <phi_n | z> <z | phi_j> dmu_{m,eps}(z). The measure carries
    N_{m,eps}(z) e^{-|z|^2}, which cancels the state normalizations, so the
    integrand is e^{-(n+j) eps/2} Phi_j^m conj(Phi_n^m) / (pi m! sqrt(n! j!))
    against e^{-|z|^2}. The expected matrix is diag(e^{-n eps}).

    Args:
        m: Landau level
        eps: Positive parameter
        n_max: Highest basis index
        rule: Polar rule (defaults to the configured 64 x 64 rule)

    Returns:
        (M, report)

    Raises:
        QuadratureError: If the rule is too small for n_max and m
    """
    if not (math.isfinite(eps) and eps > 0):
        raise DomainError(f"eps must be positive, got {eps!r}")
    rule = _default_rule(rule)
    check_polar_rule(rule, n_max, m)
    basis = [phi_normalized((m, n), rule.nodes) for n in range(n_max + 1)]
    size = n_max + 1
    matrix = np.empty((size, size), dtype=complex)
    for n in range(size):
        for j in range(size):
            product = basis[j] * np.conj(basis[n])
            matrix[n, j] = math.exp(-0.5 * (n + j) * eps) * integrate(rule, lambda _z, p=product: p)
    expected = np.diag(np.exp(-eps * np.arange(size)))
    defect = float(np.max(np.abs(matrix - expected)))
    report = VerificationReport.build(
        "identity_matrix",
        {"m": m, "eps": eps, "n_max": n_max, **_rule_params(rule)},
        defect, defect, 1e-10,
    )
    logger.debug("identity matrix m=%d eps=%g n_max=%d: defect %.3e", m, eps, n_max, defect)
    return matrix, report


def identity_limit_sweep(m: int, n_max: int, eps_list: Sequence[float],
                         rule: QuadratureRule = None, tolerance: float = 0.1) -> VerificationReport:
    """
    Track max |M - I| as eps decreases.

    The report passes when the defects do not increase along eps_list and the
    last one is below tolerance; a non-monotone sequence is reported with an
    infinite defect.

    Args:
        m: Landau level
        n_max: Highest basis index
        eps_list: Strictly decreasing positive values
        rule: Polar rule
        tolerance: Bound on the defect at the smallest eps

    Returns:
        VerificationReport whose params carry the defect sequence
    """
    eps_list = [float(e) for e in eps_list]
    if not eps_list:
        raise DomainError("eps_list must not be empty")
    if any(not e > 0 for e in eps_list) or any(b >= a for a, b in zip(eps_list, eps_list[1:])):
        raise DomainError("eps_list must be strictly decreasing and positive")
    rule = _default_rule(rule)
    defects = []
    for eps in eps_list:
        matrix, _ = identity_matrix(m, eps, n_max, rule)
        defects.append(float(np.max(np.abs(matrix - np.eye(n_max + 1)))))
    monotone = all(b <= a + MONOTONE_SLACK for a, b in zip(defects, defects[1:]))
    final = defects[-1] if monotone else math.inf
    return VerificationReport.build(
        "identity_limit_sweep",
        {"m": m, "n_max": n_max, "eps_list": eps_list, "defects": defects,
         "monotone": monotone, **_rule_params(rule)},
        final, final, tolerance,
    )


def trace_estimate(m: int, eps: float, n_max: int, rule: QuadratureRule = None) -> float:
    """
    Trace of the epsilon-identity operator from the matrix diagonal.

    The diagonal is summed up to n_max and the rest is extrapolated as a
    geometric series with the ratio of the last two diagonal entries.
    """
    if n_max < 1:
        raise DomainError("trace extrapolation needs n_max >= 1")
    matrix, _ = identity_matrix(m, eps, n_max, rule)
    diag = np.real(np.diag(matrix))
    ratio = diag[-1] / diag[-2]
    return math.fsum(diag) + diag[-1] * ratio / (1.0 - ratio)
