"""
Property suites.

Each suite is a static method of PropertySuites that takes keyword
parameters (all defaulted) and returns a VerificationReport. Suites are
looked up by name, so the method name is the suite identifier.
"""
import inspect
import math
from typing import Dict, List, Sequence

import numpy as np

from ..bargmann import (
    bargmann_classical,
    normalized_kernel,
    polyanalytic_defect,
    transform,
    transform_grid,
    transform_printed,
)
from ..config import DEFAULTS
from ..data_classes import StateLabel, TransformSpec, VerificationReport
from ..exceptions import DomainError
from ..polyfock import gram_matrix, phi, phi_series, reproducing_kernel
from ..quad import gauss_hermite, integrate, polar_rule
from ..specfun import (
    deruyts_closed,
    deruyts_partial_sum,
    hermite,
    hermite_integral,
    ho_eigenfunction,
    laguerre,
    laguerre_explicit,
    meixner_closed,
    meixner_partial_sum,
)
from ..states import (
    apply_heat,
    coefficients,
    heat_kernel,
    heat_limit_defects,
    heat_series,
    mehler_kernel,
    mehler_series,
    overlap,
    overlap_limit_defect,
    overlap_series,
    thermal_shift,
    wavefunction_closed,
    wavefunction_norm,
    wavefunction_series,
)
from .identity import MONOTONE_SLACK, identity_limit_sweep, identity_matrix, trace_estimate

WAVEFUNCTION_POINTS = (0j, 1 + 0j, 1.2 + 0.3j, -0.7j)
OVERLAP_POINTS = (0j, 0.5 + 0j, -0.3 + 0.6j, 0.8 - 0.4j)


def _grid(lo: float, hi: float, count: int) -> np.ndarray:
    return np.linspace(lo, hi, count)


def _square(lo: float, hi: float, count: int) -> np.ndarray:
    axis = np.linspace(lo, hi, count)
    return (axis[None, :] + 1j * axis[:, None]).ravel()


def _pairs(points: Sequence[complex]) -> List[List[float]]:
    return [[complex(p).real, complex(p).imag] for p in points]


def _sup_rel(approx, exact) -> float:
    """max |approx - exact| / max |exact| over the sample."""
    approx = np.asarray(approx)
    exact = np.asarray(exact)
    scale = float(np.max(np.abs(exact)))
    diff = float(np.max(np.abs(approx - exact)))
    return diff / scale if scale > 0 else diff


def _eigenstate(n: int):
    return lambda x: ho_eigenfunction(n, x)


class PropertySuites:
    """Named property suites; every method is one suite."""

    # special functions

    @staticmethod
    def laguerre_recurrence(n_max: int = 12, alphas: Sequence[float] = (0.0, 1.0, 2.5),
                            t_count: int = 21) -> VerificationReport:
        """Recurrence-evaluated Laguerre polynomials against the explicit sum on [-5, 5]."""
        t = _grid(-5.0, 5.0, t_count)
        worst_abs, worst_rel = 0.0, 0.0
        for n in range(n_max + 1):
            for alpha in alphas:
                rec = laguerre((n, alpha), t)
                ref = laguerre_explicit((n, alpha), t)
                worst_abs = max(worst_abs, float(np.max(np.abs(rec - ref))))
                worst_rel = max(worst_rel, _sup_rel(rec, ref))
        return VerificationReport.build(
            "laguerre_recurrence",
            {"n_max": n_max, "alphas": list(alphas), "t_range": [-5.0, 5.0], "t_count": t_count},
            worst_abs, worst_rel, 1e-11,
        )

    @staticmethod
    def laguerre_negative_superscript(m_max: int = 10, t_count: int = 18) -> VerificationReport:
        """L_m^(-k)(t) against (-t)^k (m-k)!/m! L_{m-k}^(k)(t) evaluated directly."""
        t = _grid(0.1, 9.0, t_count)
        worst_abs, worst_rel = 0.0, 0.0
        for m in range(1, m_max + 1):
            for k in range(1, m + 1):
                value = laguerre((m, -k), t)
                ratio = math.factorial(m - k) / math.factorial(m)
                direct = (-t) ** k * ratio * laguerre((m - k, k), t)
                worst_abs = max(worst_abs, float(np.max(np.abs(value - direct))))
                worst_rel = max(worst_rel, _sup_rel(value, direct))
        return VerificationReport.build(
            "laguerre_negative_superscript",
            {"m_max": m_max, "t_range": [0.1, 9.0], "t_count": t_count},
            worst_abs, worst_rel, 1e-12,
        )

    @staticmethod
    def deruyts(m_max: int = 6, s_values: Sequence[float] = (0.5, 2.0),
                alphas: Sequence[float] = (0.3, 1.7), trunc: int = 200) -> VerificationReport:
        """Partial sums of sum (s alpha)^n/n! L_m^(n-m)(s) against s^m/m! (alpha-1)^m e^(s alpha)."""
        worst_abs, worst_rel = 0.0, 0.0
        for m in range(m_max + 1):
            for s in s_values:
                for alpha in alphas:
                    closed = deruyts_closed(m, s, alpha)
                    diff = abs(deruyts_partial_sum(m, s, alpha, trunc) - closed)
                    worst_abs = max(worst_abs, diff)
                    worst_rel = max(worst_rel, diff / abs(closed))
        return VerificationReport.build(
            "deruyts",
            {"m_max": m_max, "s_values": list(s_values), "alphas": list(alphas), "trunc": trunc},
            worst_abs, worst_rel, 1e-10,
        )

    @staticmethod
    def meixner(m_max: int = 5, zetas: Sequence[float] = (0.4, 1.2),
                points: Sequence[float] = (0.5, 3.0), trunc: int = 200) -> VerificationReport:
        """Wicksell-Campbell-Meixner sum with equal degrees against its closed form."""
        worst_abs, worst_rel = 0.0, 0.0
        for m in range(m_max + 1):
            for zeta in zetas:
                for x in points:
                    for y in points:
                        closed = meixner_closed(m, zeta, x, y)
                        diff = abs(meixner_partial_sum(m, zeta, x, y, trunc) - closed)
                        worst_abs = max(worst_abs, diff)
                        worst_rel = max(worst_rel, diff / max(abs(closed), 1e-300))
        return VerificationReport.build(
            "meixner",
            {"m_max": m_max, "zetas": list(zetas), "points": list(points), "trunc": trunc},
            worst_abs, worst_rel, 1e-10,
        )

    @staticmethod
    def hermite_integral(p_max: int = 8, x_count: int = 13,
                         order: int = DEFAULTS.hermite_integral_order) -> VerificationReport:
        """Integral representation of H_p against the recurrence on [-3, 3]."""
        x = _grid(-3.0, 3.0, x_count)
        worst_abs, worst_rel = 0.0, 0.0
        for p in range(p_max + 1):
            approx = hermite_integral(p, x, order)
            exact = hermite(p, x)
            worst_abs = max(worst_abs, float(np.max(np.abs(approx - exact))))
            worst_rel = max(worst_rel, _sup_rel(approx, exact))
        return VerificationReport.build(
            "hermite_integral",
            {"p_max": p_max, "x_range": [-3.0, 3.0], "x_count": x_count, "order": order},
            worst_abs, worst_rel, 1e-9,
        )

    @staticmethod
    def ho_normalization(n_max: int = 10, order: int = 96) -> VerificationReport:
        """int phi_n^2 dx = 1 by Gauss-Hermite with the weight restored."""
        rule = gauss_hermite(order)
        worst = 0.0
        for n in range(n_max + 1):
            norm = integrate(rule, lambda x, n=n: ho_eigenfunction(n, x) ** 2, weighted=False)
            worst = max(worst, abs(norm - 1.0))
        return VerificationReport.build(
            "ho_normalization", {"n_max": n_max, "order": order}, worst, worst, 1e-12,
        )

    # polyanalytic basis

    @staticmethod
    def kernel_series(m_max: int = 4, side: int = 5, trunc: int = 200) -> VerificationReport:
        """Partial sums of sum Phi_n(z) conj(Phi_n(w))/(pi m! n!) against K_m(z, w)."""
        points = _square(-1.5, 1.5, side)
        worst_abs, worst_rel = 0.0, 0.0
        for m in range(m_max + 1):
            basis = phi_series(m, points, trunc)
            approx = np.empty((len(points), len(points)), dtype=complex)
            for a in range(len(points)):
                for b in range(len(points)):
                    terms = basis[:, a] * np.conj(basis[:, b])
                    approx[a, b] = complex(math.fsum(terms.real), math.fsum(terms.imag))
            exact = reproducing_kernel(m, points[:, None], points[None, :])
            worst_abs = max(worst_abs, float(np.max(np.abs(approx - exact))))
            worst_rel = max(worst_rel, _sup_rel(approx, exact))
        return VerificationReport.build(
            "kernel_series",
            {"m_max": m_max, "grid": [-1.5, 1.5, side], "trunc": trunc},
            worst_abs, worst_rel, 1e-9,
        )

    @staticmethod
    def kernel_hermitian(m_max: int = 4, side: int = 5) -> VerificationReport:
        """K_m(z, w) = conj(K_m(w, z)) as computed."""
        points = _square(-1.5, 1.5, side)
        worst_abs, worst_rel = 0.0, 0.0
        for m in range(m_max + 1):
            forward = reproducing_kernel(m, points[:, None], points[None, :])
            backward = reproducing_kernel(m, points[None, :], points[:, None])
            worst_abs = max(worst_abs, float(np.max(np.abs(forward - np.conj(backward)))))
            worst_rel = max(worst_rel, _sup_rel(np.conj(backward), forward))
        return VerificationReport.build(
            "kernel_hermitian", {"m_max": m_max, "grid": [-1.5, 1.5, side]},
            worst_abs, worst_rel, 1e-15,
        )

    @staticmethod
    def kernel_zero_set(center: Sequence[float] = (0.3, -0.2), count: int = 8) -> VerificationReport:
        """K_1(z, w) vanishes on the circle |z - w| = 1."""
        z = complex(*center)
        w = z + np.exp(2j * np.pi * np.arange(count) / count)
        values = np.abs(reproducing_kernel(1, z, w))
        worst = float(np.max(values))
        return VerificationReport.build(
            "kernel_zero_set", {"center": list(center), "count": count},
            worst, worst, 1e-12, criterion="abs",
        )

    @staticmethod
    def orthogonality(levels: Sequence[int] = (0, 1, 2, 4), n_max: int = 8,
                      radial_order: int = 64, angular_order: int = 64) -> VerificationReport:
        """Gram matrix of Phi_0^m .. Phi_{n_max}^m against diag(pi m! n!)."""
        rule = polar_rule(radial_order, angular_order)
        worst_abs, worst_rel = 0.0, 0.0
        for m in levels:
            gram = gram_matrix(m, n_max, rule)
            diag = np.array([math.pi * math.factorial(m) * math.factorial(n) for n in range(n_max + 1)])
            diff = np.abs(gram - np.diag(diag))
            worst_abs = max(worst_abs, float(np.max(diff)))
            worst_rel = max(worst_rel, float(np.max(diff / np.sqrt(np.outer(diag, diag)))))
        return VerificationReport.build(
            "orthogonality",
            {"levels": list(levels), "n_max": n_max, "radial_order": radial_order,
             "angular_order": angular_order},
            worst_abs, worst_rel, 1e-10,
        )

    # quadrature

    @staticmethod
    def hermite_exactness(orders: Sequence[int] = (1, 2, 5, 10, 20)) -> VerificationReport:
        """Gauss-Hermite moments of x^k e^{-x^2} for k <= 2q - 1."""
        worst_abs, worst_rel = 0.0, 0.0
        for q in orders:
            rule = gauss_hermite(q)
            for k in range(2 * q):
                exact = math.gamma((k + 1) / 2.0) if k % 2 == 0 else 0.0
                approx = integrate(rule, lambda x, k=k: x ** k).real
                scale = math.gamma((k + 1) / 2.0)
                worst_abs = max(worst_abs, abs(approx - exact))
                worst_rel = max(worst_rel, abs(approx - exact) / scale)
        return VerificationReport.build(
            "hermite_exactness", {"orders": list(orders)}, worst_abs, worst_rel, 1e-12,
        )

    @staticmethod
    def polar_angular_exactness(radial_order: int = 8, angular_order: int = 16, tolerance: float = 1e-13,
                                weight_tolerance: float = 1e-12) -> VerificationReport:
        """
        Angular frequencies 0 < |k| < angular_order integrate to zero.

        defect_abs is the largest angular integral, held against tolerance;
        defect_rel is |sum w - pi|/pi, held against weight_tolerance. A weight
        sum outside its bound turns defect_abs into inf.
        """
        rule = polar_rule(radial_order, angular_order)
        worst = 0.0
        for k in range(-angular_order + 1, angular_order):
            if k == 0:
                continue
            value = integrate(rule, lambda z, k=k: (1.0 + np.abs(z) ** 2) * np.exp(1j * k * np.angle(z)))
            worst = max(worst, abs(value))
        weight_rel = abs(math.fsum(rule.weights) - math.pi) / math.pi
        weight_ok = weight_rel <= weight_tolerance
        return VerificationReport.build(
            "polar_angular_exactness",
            {"radial_order": radial_order, "angular_order": angular_order,
             "weight_sum_defect_rel": weight_rel, "weight_tolerance": weight_tolerance, "weight_sum_ok": weight_ok},
            worst if weight_ok else math.inf, weight_rel, tolerance, criterion="abs",
        )

    @staticmethod
    def quadrature_refinement(m: int = 2, n_max: int = 6, radial_order: int = 32,
                              angular_order: int = 32) -> VerificationReport:
        """Doubling both polar orders leaves the Gram matrix unchanged."""
        coarse = gram_matrix(m, n_max, polar_rule(radial_order, angular_order))
        fine = gram_matrix(m, n_max, polar_rule(2 * radial_order, 2 * angular_order))
        diag = np.abs(np.diag(fine))
        diff = np.abs(coarse - fine)
        rel = float(np.max(diff / np.sqrt(np.outer(diag, diag))))
        return VerificationReport.build(
            "quadrature_refinement",
            {"m": m, "n_max": n_max, "radial_order": radial_order, "angular_order": angular_order},
            float(np.max(diff)), rel, 1e-12,
        )

    # epsilon coherent states

    @staticmethod
    def unit_norm(m_max: int = 6, eps_values: Sequence[float] = (0.1, 0.5, 1.0)) -> VerificationReport:
        """sum |c_n|^2 = 1 at the default truncation."""
        worst = 0.0
        for z in WAVEFUNCTION_POINTS:
            for m in range(m_max + 1):
                for eps in eps_values:
                    worst = max(worst, abs(coefficients(StateLabel(z, m, eps)).norm_squared - 1.0))
        return VerificationReport.build(
            "unit_norm",
            {"points": _pairs(WAVEFUNCTION_POINTS), "m_max": m_max, "eps_values": list(eps_values)},
            worst, worst, 1e-10, criterion="abs",
        )

    @staticmethod
    def overlap_hermitian(m_max: int = 5, eps_values: Sequence[float] = (0.3, 1.0)) -> VerificationReport:
        """overlap(z, w) = conj(overlap(w, z))."""
        worst = 0.0
        for m in range(m_max + 1):
            for eps in eps_values:
                for z in OVERLAP_POINTS:
                    for w in OVERLAP_POINTS:
                        diff = overlap(z, w, m, eps).value - overlap(w, z, m, eps).conjugate()
                        worst = max(worst, abs(diff))
        return VerificationReport.build(
            "overlap_hermitian",
            {"points": _pairs(OVERLAP_POINTS), "m_max": m_max, "eps_values": list(eps_values)},
            worst, worst, 1e-14, criterion="abs",
        )

    @staticmethod
    def wavefunction_closed_form(m_max: int = 6, eps_values: Sequence[float] = (0.1, 0.5, 1.0),
                                 x_count: int = 81) -> VerificationReport:
        """Closed-form wavefunction against the truncated eigenfunction series on [-4, 4]."""
        x = _grid(-4.0, 4.0, x_count)
        worst_abs, worst_rel = 0.0, 0.0
        for z in WAVEFUNCTION_POINTS:
            for m in range(m_max + 1):
                for eps in eps_values:
                    label = StateLabel(z, m, eps)
                    series = wavefunction_series(x, label)
                    closed = wavefunction_closed(x, label)
                    worst_abs = max(worst_abs, float(np.max(np.abs(closed - series))))
                    worst_rel = max(worst_rel, _sup_rel(closed, series))
        return VerificationReport.build(
            "wavefunction_closed_form",
            {"points": _pairs(WAVEFUNCTION_POINTS), "m_max": m_max, "eps_values": list(eps_values),
             "x_range": [-4.0, 4.0], "x_count": x_count},
            worst_abs, worst_rel, 1e-10,
        )

    @staticmethod
    def wavefunction_norm(m_max: int = 6, eps_values: Sequence[float] = (0.1, 0.5, 1.0),
                          order: int = 96) -> VerificationReport:
        """int |psi|^2 dx = 1 for the closed-form wavefunction."""
        worst = 0.0
        for z in WAVEFUNCTION_POINTS:
            for m in range(m_max + 1):
                for eps in eps_values:
                    worst = max(worst, abs(wavefunction_norm(StateLabel(z, m, eps), order) - 1.0))
        return VerificationReport.build(
            "wavefunction_norm",
            {"points": _pairs(WAVEFUNCTION_POINTS), "m_max": m_max, "eps_values": list(eps_values),
             "order": order},
            worst, worst, 1e-9, criterion="abs",
        )

    @staticmethod
    def overlap_closed_form(m_max: int = 5, eps_values: Sequence[float] = (0.3, 1.0)) -> VerificationReport:
        """Closed-form overlap against its series; the diagonal must be 1."""
        worst_abs, worst_rel, worst_diag = 0.0, 0.0, 0.0
        for m in range(m_max + 1):
            for eps in eps_values:
                closed = np.array([[overlap(z, w, m, eps).value for w in OVERLAP_POINTS] for z in OVERLAP_POINTS])
                series = np.array([[overlap_series(z, w, m, eps) for w in OVERLAP_POINTS] for z in OVERLAP_POINTS])
                worst_abs = max(worst_abs, float(np.max(np.abs(closed - series))))
                worst_rel = max(worst_rel, _sup_rel(closed, series))
                worst_diag = max(worst_diag, float(np.max(np.abs(np.diag(closed) - 1.0))))
        return VerificationReport.build(
            "overlap_closed_form",
            {"points": _pairs(OVERLAP_POINTS), "m_max": m_max, "eps_values": list(eps_values),
             "diagonal_defect": worst_diag},
            worst_abs, max(worst_rel, worst_diag), 1e-10,
        )

    @staticmethod
    def thermal_stability(m_max: int = 6, eps_values: Sequence[float] = (0.1, 0.5, 1.0),
                          shifts: Sequence[float] = (0.1, 0.5)) -> VerificationReport:
        """diag(e^{-nt/2}) c(eps) = scale c(eps + t) entrywise."""
        worst = 0.0
        for z in WAVEFUNCTION_POINTS:
            for m in range(m_max + 1):
                for eps in eps_values:
                    label = StateLabel(z, m, eps)
                    base = coefficients(label)
                    for t in shifts:
                        scale, shifted = thermal_shift(label, t)
                        left = np.exp(-0.5 * t * np.arange(base.trunc)) * base.entries
                        right = scale * coefficients(shifted, base.trunc).entries
                        worst = max(worst, float(np.max(np.abs(left - right))))
        return VerificationReport.build(
            "thermal_stability",
            {"points": _pairs(WAVEFUNCTION_POINTS), "m_max": m_max, "eps_values": list(eps_values),
             "shifts": list(shifts)},
            worst, worst, 1e-12, criterion="abs",
        )

    @staticmethod
    def mehler_series(taus: Sequence[float] = (0.2, 0.6, 0.9), side: int = 7,
                      trunc: int = 300) -> VerificationReport:
        """Closed-form Mehler kernel against its Hermite series on [-3, 3]^2."""
        axis = _grid(-3.0, 3.0, side)
        worst_abs, worst_rel = 0.0, 0.0
        for tau in taus:
            closed = np.array([[mehler_kernel(tau, x, y) for y in axis] for x in axis])
            series = np.array([[mehler_series(tau, x, y, trunc) for y in axis] for x in axis])
            worst_abs = max(worst_abs, float(np.max(np.abs(closed - series))))
            worst_rel = max(worst_rel, _sup_rel(series, closed))
        return VerificationReport.build(
            "mehler_series", {"taus": list(taus), "grid": [-3.0, 3.0, side], "trunc": trunc},
            worst_abs, worst_rel, 1e-11,
        )

    @staticmethod
    def heat_kernel_series(eps_values: Sequence[float] = (0.2, 0.5, 1.0), side: int = 7,
                           trunc: int = 300) -> VerificationReport:
        """Heat kernel against sum e^{-n eps} phi_n(x) phi_n(y); symmetric in (x, y)."""
        axis = _grid(-3.0, 3.0, side)
        worst_abs, worst_rel, asym = 0.0, 0.0, 0.0
        for eps in eps_values:
            closed = heat_kernel(eps, axis[:, None], axis[None, :])
            series = np.array([[heat_series(eps, x, y, trunc) for y in axis] for x in axis])
            worst_abs = max(worst_abs, float(np.max(np.abs(closed - series))))
            worst_rel = max(worst_rel, _sup_rel(series, closed))
            asym = max(asym, float(np.max(np.abs(closed - closed.T))))
        return VerificationReport.build(
            "heat_kernel_series",
            {"eps_values": list(eps_values), "grid": [-3.0, 3.0, side], "trunc": trunc, "asymmetry": asym},
            worst_abs, max(worst_rel, asym), 1e-10,
        )

    @staticmethod
    def heat_spectral(eps: float = 0.5, n_max: int = 10, x_count: int = 81) -> VerificationReport:
        """apply_heat(phi_n) = e^{-n eps} phi_n on [-4, 4]."""
        x = _grid(-4.0, 4.0, x_count)
        worst = 0.0
        for n in range(n_max + 1):
            smoothed = apply_heat(eps, _eigenstate(n), x)
            exact = math.exp(-n * eps) * ho_eigenfunction(n, x)
            worst = max(worst, float(np.max(np.abs(smoothed.values - exact))))
        return VerificationReport.build(
            "heat_spectral",
            {"eps": eps, "n_max": n_max, "x_range": [-4.0, 4.0], "x_count": x_count},
            worst, worst, 1e-9, criterion="abs",
        )

    @staticmethod
    def heat_identity_limit(n_max: int = 5, decay: float = 0.5,
                            eps_list: Sequence[float] = (0.2, 0.1, 0.05, 0.02),
                            x_count: int = 81, tolerance: float = 0.05) -> VerificationReport:
        """
        sup |O_eps[f] - f| decreases along eps_list for f = sum_n decay^n phi_n, n <= n_max.

        f has unit L2 norm. With decay = 1 every basis function carries the
        same weight; the default 0.5 keeps the final defect below 0.05.
        The defect is the value at the smallest eps, or inf when the sequence
        increases somewhere.
        """
        if not 0.0 < decay <= 1.0:
            raise DomainError(f"decay must lie in (0, 1], got {decay}")
        x = _grid(-4.0, 4.0, x_count)
        weights = decay ** np.arange(n_max + 1, dtype=float)
        weights /= np.linalg.norm(weights)

        def f(y):
            return sum(c * ho_eigenfunction(n, y) for n, c in enumerate(weights))

        defects = heat_limit_defects(f, eps_list, x)
        monotone = all(b <= a + MONOTONE_SLACK for a, b in zip(defects, defects[1:]))
        final = defects[-1] if monotone else math.inf
        return VerificationReport.build(
            "heat_identity_limit",
            {"n_max": n_max, "decay": decay, "eps_list": list(eps_list), "defects": defects,
             "monotone": monotone, "x_range": [-4.0, 4.0], "x_count": x_count},
            final, final, tolerance, criterion="abs",
        )

    @staticmethod
    def overlap_limit(m_max: int = 5, eps_list: Sequence[float] = (0.1, 0.01, 0.001)) -> VerificationReport:
        """
        |overlap - K_m(z,w)/sqrt(K_m(z,z) K_m(w,w))| <= 10 eps on the overlap grid.

        The relative defect is the worst ratio defect/eps.
        """
        worst_abs, worst_ratio = 0.0, 0.0
        monotone = True
        for m in range(m_max + 1):
            for z in OVERLAP_POINTS:
                for w in OVERLAP_POINTS:
                    defects = overlap_limit_defect(z, w, m, eps_list)
                    monotone &= all(b <= a + MONOTONE_SLACK for a, b in zip(defects, defects[1:]))
                    worst_abs = max(worst_abs, max(defects))
                    worst_ratio = max(worst_ratio, max(d / e for d, e in zip(defects, eps_list)))
        if not monotone:
            worst_ratio = math.inf
        return VerificationReport.build(
            "overlap_limit",
            {"points": _pairs(OVERLAP_POINTS), "m_max": m_max, "eps_list": list(eps_list),
             "monotone": monotone},
            worst_abs, worst_ratio, 10.0,
        )

    # Bargmann-type transform

    @staticmethod
    def bargmann_coefficients(m_max: int = 5, n_max: int = 8, eps_values: Sequence[float] = (0.3, 1.0),
                              side: int = 3, quad_order: int = 96) -> VerificationReport:
        """B_m^eps[phi_n](z) = conj(Phi_n^m(z)) e^{-n eps/2} / sqrt(pi m! n!)."""
        points = _square(-1.0, 1.0, side)
        worst_abs, worst_rel = 0.0, 0.0
        for m in range(m_max + 1):
            for eps in eps_values:
                spec = TransformSpec(m, eps, quad_order)
                for n in range(n_max + 1):
                    values = np.array(transform_grid(spec, _eigenstate(n), points))
                    norm = math.sqrt(math.pi * math.factorial(m) * math.factorial(n))
                    exact = np.conj(phi((m, n), points)) * math.exp(-0.5 * n * eps) / norm
                    worst_abs = max(worst_abs, float(np.max(np.abs(values - exact))))
                    worst_rel = max(worst_rel, _sup_rel(values, exact))
        return VerificationReport.build(
            "bargmann_coefficients",
            {"m_max": m_max, "n_max": n_max, "eps_values": list(eps_values), "grid": [-1.0, 1.0, side],
             "quad_order": quad_order},
            worst_abs, worst_rel, 1e-9, criterion="abs",
        )

    @staticmethod
    def bargmann_classical(n_max: int = 8, side: int = 3, quad_order: int = 96) -> VerificationReport:
        """
        B[phi_n](z) = z^n / sqrt(n!), and the eps = 0, m = 0 transform equals
        conj(B[phi])/sqrt(pi) for real phi.
        """
        points = _square(-1.0, 1.0, side)
        spec = TransformSpec(0, 0.0, quad_order)
        worst_abs, relation = 0.0, 0.0
        for n in range(n_max + 1):
            classical = np.array([bargmann_classical(_eigenstate(n), z, quad_order) for z in points])
            exact = points ** n / math.sqrt(math.factorial(n)) if n else np.ones_like(points)
            worst_abs = max(worst_abs, float(np.max(np.abs(classical - exact))))
            limit = np.array(transform_grid(spec, _eigenstate(n), points))
            relation = max(relation, float(np.max(np.abs(limit - np.conj(classical) / math.sqrt(math.pi)))))
        return VerificationReport.build(
            "bargmann_classical",
            {"n_max": n_max, "grid": [-1.0, 1.0, side], "quad_order": quad_order,
             "relation_defect": relation},
            max(worst_abs, relation), max(worst_abs, relation), 1e-10, criterion="abs",
        )

    @staticmethod
    def bargmann_linearity(m: int = 2, eps: float = 0.5, coeffs: Sequence[float] = (0.7, -1.3),
                           side: int = 3) -> VerificationReport:
        """transform(a phi_1 + b phi_3) = a transform(phi_1) + b transform(phi_3) for real a, b."""
        a, b = coeffs
        points = _square(-1.0, 1.0, side)
        spec = TransformSpec(m, eps)
        combined = np.array(transform_grid(spec, lambda x: a * ho_eigenfunction(1, x) + b * ho_eigenfunction(3, x), points))
        separate = a * np.array(transform_grid(spec, _eigenstate(1), points)) + b * np.array(
            transform_grid(spec, _eigenstate(3), points)
        )
        diff = float(np.max(np.abs(combined - separate)))
        return VerificationReport.build(
            "bargmann_linearity",
            {"m": m, "eps": eps, "coeffs": list(coeffs), "grid": [-1.0, 1.0, side]},
            diff, diff, 1e-12, criterion="abs",
        )

    @staticmethod
    def bargmann_eps_limit(m_max: int = 3, n_max: int = 4, eps: float = 1e-8,
                           side: int = 3) -> VerificationReport:
        """transform at a tiny eps against the eps = 0 transform."""
        points = _square(-1.0, 1.0, side)
        worst = 0.0
        for m in range(m_max + 1):
            for n in range(n_max + 1):
                small = np.array(transform_grid(TransformSpec(m, eps), _eigenstate(n), points))
                limit = np.array(transform_grid(TransformSpec(m, 0.0), _eigenstate(n), points))
                worst = max(worst, float(np.max(np.abs(small - limit))))
        return VerificationReport.build(
            "bargmann_eps_limit",
            {"m_max": m_max, "n_max": n_max, "eps": eps, "grid": [-1.0, 1.0, side]},
            worst, worst, 1e-6, criterion="abs",
        )

    @staticmethod
    def bargmann_polyanalytic(levels: Sequence[int] = (0, 1, 2), eps: float = 0.5,
                              n_max: int = 4) -> VerificationReport:
        """conj(B[phi]) for phi = phi_0 + ... + phi_{n_max} has conj(z)-degree <= m."""
        worst = 0.0
        for m in levels:
            f = lambda x: sum(ho_eigenfunction(n, x) for n in range(n_max + 1))
            worst = max(worst, polyanalytic_defect(TransformSpec(m, eps), f, n_max))
        return VerificationReport.build(
            "bargmann_polyanalytic",
            {"levels": list(levels), "eps": eps, "n_max": n_max},
            worst, worst, 1e-7, criterion="abs",
        )

    @staticmethod
    def bargmann_printed_kernel(m_max: int = 3, eps: float = 0.5, n_max: int = 3,
                                real_points: Sequence[float] = (-0.8, 0.0, 0.6),
                                complex_point: Sequence[float] = (0.4, 0.7)) -> VerificationReport:
        """
        The printed integral kernel equals sqrt(pi) * transform for real z and
        real phi, and sqrt(pi) * conj(transform) for m = 0. The deviation at a
        complex point for m >= 1 is reported, not bounded.
        """
        root_pi = math.sqrt(math.pi)
        zc = complex(*complex_point)
        worst, off_axis = 0.0, 0.0
        for m in range(m_max + 1):
            spec = TransformSpec(m, eps)
            for n in range(n_max + 1):
                f = _eigenstate(n)
                for x in real_points:
                    worst = max(worst, abs(transform_printed(spec, f, x) - root_pi * transform(spec, f, x)))
                printed = transform_printed(spec, f, zc)
                reference = transform(spec, f, zc)
                if m == 0:
                    worst = max(worst, abs(printed - root_pi * reference.conjugate()))
                else:
                    off_axis = max(off_axis, abs(printed - root_pi * reference))
        return VerificationReport.build(
            "bargmann_printed_kernel",
            {"m_max": m_max, "eps": eps, "n_max": n_max, "real_points": list(real_points),
             "complex_point": list(complex_point), "complex_point_deviation": off_axis},
            worst, worst, 1e-9, criterion="abs",
        )

    @staticmethod
    def normalized_kernel(m_max: int = 5, eps_values: Sequence[float] = (0.3, 0.7, 1.0)) -> VerificationReport:
        """The pi-free normalized kernel equals the state overlap."""
        worst = 0.0
        for m in range(m_max + 1):
            for eps in eps_values:
                for z in OVERLAP_POINTS:
                    for w in OVERLAP_POINTS:
                        worst = max(worst, abs(normalized_kernel(m, eps, z, w) - overlap(z, w, m, eps).value))
        return VerificationReport.build(
            "normalized_kernel",
            {"points": _pairs(OVERLAP_POINTS), "m_max": m_max, "eps_values": list(eps_values)},
            worst, worst, 1e-12, criterion="abs",
        )

    # identity operator

    @staticmethod
    def identity_matrix(levels: Sequence[int] = (0, 1, 2, 3, 4), eps_values: Sequence[float] = (0.3, 1.0),
                        n_max: int = 8, radial_order: int = 64, angular_order: int = 64) -> VerificationReport:
        """M = diag(e^{-n eps}) and M Hermitian."""
        rule = polar_rule(radial_order, angular_order)
        worst, hermitian = 0.0, 0.0
        for m in levels:
            for eps in eps_values:
                matrix, report = identity_matrix(m, eps, n_max, rule)
                worst = max(worst, report.defect_abs)
                hermitian = max(hermitian, float(np.max(np.abs(matrix - matrix.conj().T))))
        return VerificationReport.build(
            "identity_matrix",
            {"levels": list(levels), "eps_values": list(eps_values), "n_max": n_max,
             "radial_order": radial_order, "angular_order": angular_order, "hermitian_defect": hermitian},
            max(worst, hermitian), max(worst, hermitian), 1e-10,
        )

    @staticmethod
    def identity_limit_sweep(m: int = 2, n_max: int = 5,
                             eps_list: Sequence[float] = (0.5, 0.2, 0.1, 0.05, 0.02),
                             radial_order: int = 64, angular_order: int = 64,
                             tolerance: float = 0.1) -> VerificationReport:
        """max |M - I| decreases along eps_list and ends below tolerance."""
        return identity_limit_sweep(m, n_max, eps_list, polar_rule(radial_order, angular_order), tolerance)

    @staticmethod
    def trace_check(m: int = 1, eps: float = 0.5, n_max: int = 8) -> VerificationReport:
        """Extrapolated trace of the matrix against 1/(1 - e^{-eps})."""
        estimate = trace_estimate(m, eps, n_max)
        exact = 1.0 / -math.expm1(-eps)
        diff = abs(estimate - exact)
        return VerificationReport.build(
            "trace_check",
            {"m": m, "eps": eps, "n_max": n_max, "estimate": estimate, "exact": exact},
            diff, diff / exact, 1e-9,
        )


def suite_names() -> List[str]:
    """Names of all registered suites, in declaration order."""
    return [name for name, value in vars(PropertySuites).items() if isinstance(value, staticmethod)]


def suite_defaults() -> Dict[str, dict]:
    """Default keyword parameters of every suite."""
    return {
        name: {p.name: p.default for p in inspect.signature(getattr(PropertySuites, name)).parameters.values()}
        for name in suite_names()
    }
