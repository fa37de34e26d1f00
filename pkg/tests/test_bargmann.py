import math

import numpy as np
import pytest

from epscs.bargmann import (
    bargmann_classical,
    normalized_kernel,
    polyanalytic_defect,
    transform,
    transform_grid,
    transform_printed,
)
from epscs.data_classes import ComplexPoint, SampledFunction, TransformSpec
from epscs.exceptions import DomainError, NonFiniteIntegrandError, QuadratureError
from epscs.polyfock import phi
from epscs.specfun import ho_eigenfunction
from epscs.states import overlap

ROOT_PI = math.sqrt(math.pi)
POINTS = [0.0, 0.5, -0.4 + 0.9j, 1.0 - 1.0j]


def eigenstate(n):
    return lambda x: ho_eigenfunction(n, x)


class TestTransform:
    def test_ground_state_limit(self):
        spec = TransformSpec(0, 0.0)
        for z in POINTS:
            assert transform(spec, eigenstate(0), z) == pytest.approx(1 / ROOT_PI, abs=1e-12)

    def test_first_state_limit(self):
        spec = TransformSpec(0, 0.0)
        for z in POINTS:
            assert transform(spec, eigenstate(1), z) == pytest.approx(np.conj(z) / ROOT_PI, abs=1e-12)

    def test_complex_point_argument(self):
        spec = TransformSpec(1, 0.3)
        z = ComplexPoint(0.4, -0.2)
        assert transform(spec, eigenstate(2), z) == transform(spec, eigenstate(2), 0.4 - 0.2j)

    @pytest.mark.parametrize("m", range(4))
    @pytest.mark.parametrize("eps", [0.0, 0.3, 1.0])
    def test_eigenfunction_images(self, m, eps):
        spec = TransformSpec(m, eps)
        zs = np.array(POINTS)
        for n in range(7):
            values = np.array(transform_grid(spec, eigenstate(n), zs))
            norm = math.sqrt(math.pi * math.factorial(m) * math.factorial(n))
            exact = np.conj(phi((m, n), zs)) * math.exp(-0.5 * n * eps) / norm
            assert np.max(np.abs(values - exact)) < 1e-9

    def test_real_linearity(self):
        spec = TransformSpec(2, 0.5)
        combined = transform(spec, lambda x: 0.7 * ho_eigenfunction(1, x) - 1.3 * ho_eigenfunction(3, x), 0.3j)
        separate = 0.7 * transform(spec, eigenstate(1), 0.3j) - 1.3 * transform(spec, eigenstate(3), 0.3j)
        assert abs(combined - separate) < 1e-12

    def test_conjugate_linear_in_phi(self):
        spec = TransformSpec(1, 0.4)
        z = 0.2 - 0.6j
        scaled = transform(spec, lambda x: 1j * ho_eigenfunction(2, x), z)
        assert scaled == pytest.approx(-1j * transform(spec, eigenstate(2), z), abs=1e-12)

    def test_small_eps_approaches_limit(self):
        for z in POINTS:
            small = transform(TransformSpec(2, 1e-8), eigenstate(3), z)
            limit = transform(TransformSpec(2, 0.0), eigenstate(3), z)
            assert abs(small - limit) < 1e-6

    def test_empty_grid(self):
        assert transform_grid(TransformSpec(1, 0.5), eigenstate(0), []) == []

    def test_grid_order_preserved(self):
        spec = TransformSpec(0, 0.0)
        values = transform_grid(spec, eigenstate(1), [0.5, -0.5])
        assert values[0] == pytest.approx(0.5 / ROOT_PI, abs=1e-12)
        assert values[1] == pytest.approx(-0.5 / ROOT_PI, abs=1e-12)

    def test_non_finite_input(self):
        with pytest.raises(NonFiniteIntegrandError):
            transform(TransformSpec(0, 0.5), lambda x: np.full_like(x, np.inf), 0.0)

    def test_inadequate_order(self):
        spec = TransformSpec(0, 0.5, quad_order=4)
        with pytest.raises(QuadratureError):
            transform(spec, eigenstate(9), 0.5)

    @pytest.mark.parametrize("kwargs", [{"m": -1}, {"m": 0, "eps": -0.1}, {"m": 0, "quad_order": 0}])
    def test_invalid_spec(self, kwargs):
        with pytest.raises(DomainError):
            TransformSpec(**kwargs)


class TestSampledInput:
    def test_spline_samples(self):
        grid = np.linspace(-10.0, 10.0, 2001)
        sampled = SampledFunction(grid=grid, values=ho_eigenfunction(0, grid))
        spec = TransformSpec(0, 0.0, adequacy_tol=1e-5)
        assert transform(spec, sampled, 0.4) == pytest.approx(1 / ROOT_PI, abs=1e-6)

    def test_csv_input(self, tmp_path):
        grid = np.linspace(-10.0, 10.0, 2001)
        values = ho_eigenfunction(1, grid)
        path = tmp_path / "phi1.csv"
        lines = ["# first oscillator eigenfunction", "x,re,im"]
        lines += [f"{x!r},{v!r},0.0" for x, v in zip(grid.tolist(), values.tolist())]
        path.write_text("\n".join(lines) + "\n")
        sampled = SampledFunction.from_csv(str(path))
        spec = TransformSpec(0, 0.0, adequacy_tol=1e-5)
        assert transform(spec, sampled, 0.5) == pytest.approx(0.5 / ROOT_PI, abs=1e-6)

    def test_zero_outside_grid(self):
        sampled = SampledFunction(grid=np.array([0.0, 1.0]), values=np.array([1.0, 1.0]))
        np.testing.assert_allclose(sampled(np.array([-0.5, 0.5, 1.5])), [0.0, 1.0, 0.0], atol=1e-14)


class TestPrintedKernel:
    @pytest.mark.parametrize("m", range(3))
    def test_real_points(self, m):
        spec = TransformSpec(m, 0.5)
        for x in (-0.8, 0.0, 0.6):
            printed = transform_printed(spec, eigenstate(2), x)
            assert printed == pytest.approx(ROOT_PI * transform(spec, eigenstate(2), x), abs=1e-9)

    def test_level_zero_is_conjugate(self):
        spec = TransformSpec(0, 0.5)
        z = 0.4 + 0.7j
        printed = transform_printed(spec, eigenstate(3), z)
        assert printed == pytest.approx(ROOT_PI * np.conj(transform(spec, eigenstate(3), z)), abs=1e-9)


class TestClassical:
    @pytest.mark.parametrize("n", range(6))
    def test_monomials(self, n):
        for z in POINTS:
            value = bargmann_classical(eigenstate(n), z)
            assert value == pytest.approx(z ** n / math.sqrt(math.factorial(n)), abs=1e-10)

    def test_relation_to_limit(self):
        z = -0.4 + 0.9j
        classical = bargmann_classical(eigenstate(2), z)
        limit = transform(TransformSpec(0, 0.0), eigenstate(2), z)
        assert limit == pytest.approx(np.conj(classical) / ROOT_PI, abs=1e-10)


class TestTargetSpace:
    @pytest.mark.parametrize("m", range(6))
    @pytest.mark.parametrize("eps", [0.3, 1.0])
    def test_normalized_kernel_is_overlap(self, m, eps):
        for z in POINTS:
            for w in POINTS:
                assert abs(normalized_kernel(m, eps, z, w) - overlap(z, w, m, eps).value) < 1e-12

    def test_normalized_kernel_needs_positive_eps(self):
        with pytest.raises(DomainError):
            normalized_kernel(1, 0.0, 0.5, 0.5)

    @pytest.mark.parametrize("m", [0, 1, 2])
    def test_polyanalytic(self, m):
        def f(x):
            return sum(ho_eigenfunction(n, x) for n in range(5))

        assert polyanalytic_defect(TransformSpec(m, 0.5), f, 4) < 1e-7

    def test_polyanalytic_needs_enough_points(self):
        with pytest.raises(DomainError):
            polyanalytic_defect(TransformSpec(1, 0.5), eigenstate(0), 4, points=[0.0, 1.0])
