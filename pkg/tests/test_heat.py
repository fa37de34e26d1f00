import math

import numpy as np
import pytest

from epscs.data_classes import SampledFunction
from epscs.exceptions import DomainError, NonFiniteIntegrandError, QuadratureError
from epscs.specfun import ho_eigenfunction
from epscs.states import apply_heat, heat_kernel, heat_limit_defects, heat_series, mehler_kernel, mehler_series

AXIS = np.linspace(-3.0, 3.0, 7)


class TestMehler:
    @pytest.mark.parametrize("tau", [0.2, 0.6, 0.9])
    def test_matches_series(self, tau):
        closed = mehler_kernel(tau, AXIS[:, None], AXIS[None, :])
        series = np.array([[mehler_series(tau, x, y) for y in AXIS] for x in AXIS])
        assert np.max(np.abs(closed - series)) <= 1e-10 * np.max(np.abs(closed))

    def test_symmetric(self):
        closed = mehler_kernel(0.5, AXIS[:, None], AXIS[None, :])
        assert np.array_equal(closed, closed.T)

    @pytest.mark.parametrize("tau", [0.0, 1.0, -0.2, 1.5])
    def test_tau_out_of_range(self, tau):
        with pytest.raises(DomainError):
            mehler_kernel(tau, 0.0, 0.0)


class TestHeatKernel:
    @pytest.mark.parametrize("eps", [0.2, 0.5, 1.0])
    def test_matches_spectral_sum(self, eps):
        closed = heat_kernel(eps, AXIS[:, None], AXIS[None, :])
        series = np.array([[heat_series(eps, x, y) for y in AXIS] for x in AXIS])
        assert np.max(np.abs(closed - series)) <= 1e-10 * np.max(np.abs(closed))

    def test_symmetric(self):
        closed = heat_kernel(0.3, AXIS[:, None], AXIS[None, :])
        assert np.array_equal(closed, closed.T)

    @pytest.mark.parametrize("eps", [0.0, -0.1, float("nan")])
    def test_eps_must_be_positive(self, eps):
        with pytest.raises(DomainError, match="eps must be positive"):
            heat_kernel(eps, 0.0, 0.0)

    def test_tiny_eps(self):
        # e^{-eps} rounds to 1.0 here
        eps = 1e-17
        assert heat_kernel(eps, 0.0, 0.0) == pytest.approx(1.0 / math.sqrt(2.0 * math.pi * eps), rel=1e-12)
        assert heat_kernel(eps, 0.0, 0.1) == 0.0


class TestApplyHeat:
    @pytest.mark.parametrize("n", range(11))
    def test_eigenfunctions(self, n):
        x = np.linspace(-4.0, 4.0, 81)
        smoothed = apply_heat(0.5, lambda y, n=n: ho_eigenfunction(n, y), x)
        exact = math.exp(-0.5 * n) * ho_eigenfunction(n, x)
        assert np.max(np.abs(smoothed.values - exact)) < 1e-9

    def test_returns_sampled_function(self):
        x = np.linspace(-1.0, 1.0, 5)
        smoothed = apply_heat(0.4, lambda y: np.exp(-y ** 2 / 2), x)
        assert isinstance(smoothed, SampledFunction)
        np.testing.assert_array_equal(smoothed.grid, x)

    def test_inadequate_order(self):
        with pytest.raises(QuadratureError, match="doubled-order"):
            apply_heat(0.5, lambda y: np.cos(8 * y), np.linspace(-1.0, 1.0, 5), order=2)

    def test_non_finite_input(self):
        with pytest.raises(NonFiniteIntegrandError):
            apply_heat(0.5, lambda y: np.full_like(y, np.nan), np.array([0.0, 1.0]))

    def test_limit_defects_decrease(self):
        x = np.linspace(-4.0, 4.0, 41)

        def f(y):
            return sum(ho_eigenfunction(n, y) for n in range(4)) / 2.0

        defects = heat_limit_defects(f, [0.2, 0.1, 0.05, 0.02], x)
        assert all(b < a for a, b in zip(defects, defects[1:]))
        assert defects[-1] < 0.05

    def test_limit_needs_decreasing_sequence(self):
        with pytest.raises(DomainError):
            heat_limit_defects(lambda y: y, [0.1, 0.2], np.array([0.0]))
