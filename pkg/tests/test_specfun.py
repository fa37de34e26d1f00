import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from epscs.exceptions import DomainError
from epscs.quad import gauss_hermite, integrate
from epscs.specfun import (
    deruyts_closed,
    deruyts_partial_sum,
    hermite,
    hermite_explicit,
    hermite_integral,
    ho_eigenfunction,
    ho_eigenfunctions,
    laguerre,
    laguerre_explicit,
    log_factorial,
    meixner_closed,
    meixner_partial_sum,
)


class TestLaguerre:
    def test_degree_zero_is_one(self):
        assert laguerre((0, 2.5), 3.7) == 1.0

    def test_degree_one(self):
        assert laguerre((1, 0), 2.0) == pytest.approx(-1.0)

    def test_negative_superscript_example(self):
        assert laguerre((2, -1), 1.0) == pytest.approx(-0.5, abs=1e-15)

    @pytest.mark.parametrize("n", range(13))
    @pytest.mark.parametrize("alpha", [0.0, 1.0, 2.5])
    def test_recurrence_matches_explicit_sum(self, n, alpha):
        t = np.linspace(-5.0, 5.0, 21)
        rec = laguerre((n, alpha), t)
        ref = laguerre_explicit((n, alpha), t)
        assert np.max(np.abs(rec - ref)) <= 1e-11 * np.max(np.abs(ref))

    @pytest.mark.parametrize("m", range(1, 8))
    def test_negative_superscript_matches_falling_product(self, m):
        t = np.linspace(0.1, 9.0, 18)
        for k in range(1, m + 1):
            ref = laguerre_explicit((m, -k), t)
            assert np.max(np.abs(laguerre((m, -k), t) - ref)) <= 1e-10 * np.max(np.abs(ref))

    @pytest.mark.parametrize("idx", [(2, -3), (1, -0.5), (-1, 0)])
    def test_invalid_index(self, idx):
        with pytest.raises(DomainError):
            laguerre(idx, 1.0)

    def test_non_finite_argument(self):
        with pytest.raises(DomainError):
            laguerre((2, 0), float("nan"))

    def test_complex_argument(self):
        z = 0.3 + 0.4j
        assert laguerre((2, 0), z) == pytest.approx(1 - 2 * z + z * z / 2)

    def test_array_shape_preserved(self):
        t = np.zeros((2, 3))
        assert laguerre((3, 1), t).shape == (2, 3)


class TestHermite:
    @pytest.mark.parametrize("n, x, expected", [(0, 5.0, 1.0), (1, 1.5, 3.0), (3, 1.0, -4.0)])
    def test_examples(self, n, x, expected):
        assert hermite(n, x) == pytest.approx(expected)

    @pytest.mark.parametrize("n", range(11))
    def test_matches_explicit_sum(self, n):
        x = np.linspace(-2.0, 2.0, 9)
        assert_allclose(hermite(n, x), hermite_explicit(n, x), rtol=1e-12, atol=1e-8)

    def test_negative_degree(self):
        with pytest.raises(DomainError):
            hermite(-1, 0.0)


class TestEigenfunctions:
    def test_ground_state_at_origin(self):
        assert ho_eigenfunction(0, 0.0) == pytest.approx(math.pi ** -0.25)

    def test_odd_state_vanishes_at_origin(self):
        assert ho_eigenfunction(1, 0.0) == 0.0

    def test_unit_norm(self):
        rule = gauss_hermite(96)
        norm = integrate(rule, lambda x: ho_eigenfunction(7, x) ** 2, weighted=False)
        assert abs(norm - 1.0) < 1e-12

    def test_high_order_is_finite(self):
        x = np.linspace(-30.0, 30.0, 61)
        assert np.all(np.isfinite(ho_eigenfunction(500, x)))

    def test_stacked_matches_single(self):
        x = np.linspace(-3.0, 3.0, 7)
        stacked = ho_eigenfunctions(12, x)
        for n in range(13):
            assert_allclose(stacked[n], ho_eigenfunction(n, x), rtol=0, atol=0)

    def test_matches_hermite_definition(self):
        x = np.linspace(-2.0, 2.0, 5)
        n = 5
        direct = hermite(n, x) * np.exp(-x ** 2 / 2) / math.sqrt(math.sqrt(math.pi) * 2 ** n * math.factorial(n))
        assert_allclose(ho_eigenfunction(n, x), direct, rtol=1e-13, atol=1e-15)


class TestLogFactorial:
    @pytest.mark.parametrize("n, expected", [(0, 0.0), (1, 0.0), (20, math.log(2432902008176640000))])
    def test_examples(self, n, expected):
        assert log_factorial(n) == pytest.approx(expected, rel=1e-13, abs=0)

    def test_large_argument_uses_log_gamma(self):
        assert log_factorial(2000) == pytest.approx(math.lgamma(2001), rel=1e-13)

    def test_array(self):
        assert_allclose(log_factorial(np.arange(5)), np.log([1, 1, 2, 6, 24]), atol=1e-14)

    def test_negative(self):
        with pytest.raises(DomainError):
            log_factorial(-1)


class TestIdentities:
    @pytest.mark.parametrize("m", range(7))
    @pytest.mark.parametrize("s", [0.5, 2.0])
    @pytest.mark.parametrize("alpha", [0.3, 1.7])
    def test_deruyts(self, m, s, alpha):
        closed = deruyts_closed(m, s, alpha)
        assert abs(deruyts_partial_sum(m, s, alpha, 200) - closed) <= 1e-10 * abs(closed)

    @pytest.mark.parametrize("m", range(6))
    @pytest.mark.parametrize("zeta", [0.4, 1.2])
    def test_meixner(self, m, zeta):
        for x in (0.5, 3.0):
            for y in (0.5, 3.0):
                closed = meixner_closed(m, zeta, x, y)
                assert meixner_partial_sum(m, zeta, x, y, 200) == pytest.approx(closed, rel=1e-10, abs=1e-14)

    @pytest.mark.parametrize("p", range(9))
    def test_hermite_integral(self, p):
        x = np.linspace(-3.0, 3.0, 13)
        exact = hermite(p, x)
        approx = hermite_integral(p, x)
        assert np.max(np.abs(approx - exact)) <= 1e-9 * np.max(np.abs(exact))
