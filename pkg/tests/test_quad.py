import math

import numpy as np
import pytest

from epscs.exceptions import DomainError, NonFiniteIntegrandError, QuadratureError
from epscs.quad import (
    check_adequacy,
    check_polar_rule,
    doubled_order,
    gauss_hermite,
    integrate,
    polar_rule,
    required_polar_orders,
)


class TestGaussHermite:
    @pytest.mark.parametrize("order", [1, 2, 5, 10, 20])
    def test_exact_moments(self, order):
        rule = gauss_hermite(order)
        for k in range(2 * order):
            exact = math.gamma((k + 1) / 2) if k % 2 == 0 else 0.0
            value = integrate(rule, lambda x, k=k: x ** k).real
            assert abs(value - exact) <= 1e-12 * math.gamma((k + 1) / 2)

    def test_weights_sum(self):
        assert math.fsum(gauss_hermite(96).weights) == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    def test_unweighted_integral(self):
        rule = gauss_hermite(64)
        value = integrate(rule, lambda x: np.exp(-2.0 * x ** 2), weighted=False)
        assert value.real == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-13)

    def test_rule_is_read_only(self):
        rule = gauss_hermite(8)
        with pytest.raises(ValueError):
            rule.weights[0] = 1.0

    def test_cached(self):
        assert gauss_hermite(12) is gauss_hermite(12)

    @pytest.mark.parametrize("order", [0, 513, 2.5])
    def test_order_out_of_range(self, order):
        with pytest.raises(DomainError):
            gauss_hermite(order)


class TestPolarRule:
    def test_weights_sum_to_pi(self):
        assert math.fsum(polar_rule(16, 8).weights) == pytest.approx(math.pi, rel=1e-14)

    @pytest.mark.parametrize("k", range(6))
    def test_radial_moments(self, k):
        rule = polar_rule(8, 4)
        value = integrate(rule, lambda z: np.abs(z) ** (2 * k))
        assert value.real == pytest.approx(math.pi * math.factorial(k), rel=1e-12)

    def test_angular_frequencies_vanish(self):
        rule = polar_rule(4, 12)
        for k in range(1, 12):
            assert abs(integrate(rule, lambda z, k=k: (z / np.abs(z)) ** k)) < 1e-13

    def test_node_count(self):
        assert len(polar_rule(5, 7)) == 35

    def test_check_names_requirements(self):
        assert required_polar_orders(8, 4) == (13, 17)
        with pytest.raises(QuadratureError, match="angular_order >= 17"):
            check_polar_rule(polar_rule(64, 16), 8, 4)

    def test_check_rejects_hermite_rule(self):
        with pytest.raises(QuadratureError):
            check_polar_rule(gauss_hermite(8), 1, 0)


class TestIntegrate:
    def test_non_finite_integrand(self):
        rule = gauss_hermite(6)

        def f(x):
            out = np.ones_like(x)
            out[2] = np.nan
            return out

        with pytest.raises(NonFiniteIntegrandError) as info:
            integrate(rule, f)
        assert info.value.index == 2

    def test_wrong_shape(self):
        with pytest.raises(QuadratureError):
            integrate(gauss_hermite(4), lambda x: np.ones(3))

    def test_unweighted_needs_hermite_rule(self):
        with pytest.raises(QuadratureError):
            integrate(polar_rule(4, 4), lambda z: np.ones(len(z)), weighted=False)


class TestAdequacy:
    def test_doubled_order(self):
        assert doubled_order(96) == (96, 192)
        assert doubled_order(300) == (150, 300)

    def test_passes(self):
        assert check_adequacy(np.array([1.0, 2.0]), np.array([1.0, 2.0 + 1e-13]), 1e-10, "test") < 1e-10

    def test_empty(self):
        assert check_adequacy(np.array([]), np.array([]), 1e-10, "test") == 0.0

    def test_fails(self):
        with pytest.raises(QuadratureError, match="doubled-order"):
            check_adequacy(np.array([1.0]), np.array([1.1]), 1e-10, "test")
