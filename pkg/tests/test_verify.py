import math

import numpy as np
import pytest

from epscs.data_classes import VerificationReport
from epscs.exceptions import DomainError, QuadratureError, UnknownSuiteError
from epscs.quad import polar_rule
from epscs.verify import (
    PropertySuites,
    all_passed,
    default_config,
    get_suite,
    identity_limit_sweep,
    identity_matrix,
    run_all,
    run_suite,
    suite_names,
    trace_estimate,
)


class TestIdentityMatrix:
    def test_ground_entry(self):
        matrix, report = identity_matrix(0, 0.3, 4)
        assert matrix[0, 0] == pytest.approx(1.0, abs=1e-10)
        assert report.passed

    def test_off_diagonal_vanishes(self):
        matrix, _ = identity_matrix(2, 0.5, 5)
        assert abs(matrix[3, 5]) < 1e-10

    def test_diagonal_decay(self):
        matrix, _ = identity_matrix(1, 0.4, 4)
        assert matrix[4, 4] == pytest.approx(math.exp(-1.6), abs=1e-10)

    @pytest.mark.parametrize("m", [0, 3])
    def test_hermitian(self, m):
        matrix, _ = identity_matrix(m, 1.0, 6)
        assert np.max(np.abs(matrix - matrix.conj().T)) < 1e-12

    def test_rule_too_small(self):
        with pytest.raises(QuadratureError):
            identity_matrix(2, 0.5, 8, polar_rule(4, 4))

    def test_eps_must_be_positive(self):
        with pytest.raises(DomainError):
            identity_matrix(1, 0.0, 3)

    def test_trace(self):
        estimate = trace_estimate(1, 0.5, 8)
        assert estimate == pytest.approx(1.0 / (1.0 - math.exp(-0.5)), rel=1e-9)


class TestLimitSweep:
    def test_defects_decrease(self):
        report = identity_limit_sweep(2, 5, [0.5, 0.2, 0.1, 0.05, 0.02])
        defects = report.params["defects"]
        assert report.params["monotone"]
        assert defects[-1] < defects[0]
        assert report.passed

    def test_defect_scale(self):
        # max |M - I| = 1 - e^{-n_max eps}
        report = identity_limit_sweep(0, 4, [0.1])
        assert report.defect_abs == pytest.approx(1.0 - math.exp(-0.4), abs=1e-10)

    @pytest.mark.parametrize("eps_list", [[], [0.1, 0.2], [0.1, -0.1]])
    def test_bad_sequence(self, eps_list):
        with pytest.raises(DomainError):
            identity_limit_sweep(1, 3, eps_list)


class TestHeatLimitSuite:
    def test_default_covers_first_six_eigenfunctions(self):
        report = run_suite("heat_identity_limit")
        defects = report.params["defects"]
        assert report.params["n_max"] == 5
        assert all(b < a for a, b in zip(defects, defects[1:]))
        assert defects[-1] < 0.05
        assert report.passed

    def test_equal_weights_decrease(self):
        report = run_suite("heat_identity_limit", {"decay": 1.0, "tolerance": 0.1})
        defects = report.params["defects"]
        assert report.params["monotone"]
        assert all(b < a for a, b in zip(defects, defects[1:]))

    @pytest.mark.parametrize("decay", [0.0, 1.5])
    def test_bad_decay(self, decay):
        with pytest.raises(DomainError):
            run_suite("heat_identity_limit", {"decay": decay})


class TestAngularExactnessSuite:
    def test_separate_bounds(self):
        report = run_suite("polar_angular_exactness")
        assert report.tolerance == 1e-13
        assert report.params["weight_tolerance"] == 1e-12
        assert report.defect_rel == report.params["weight_sum_defect_rel"]
        assert report.defect_rel <= 1e-12
        assert report.passed

    def test_weight_sum_outside_bound_fails(self):
        report = run_suite("polar_angular_exactness", {"weight_tolerance": -1.0})
        assert not report.params["weight_sum_ok"]
        assert report.defect_abs == math.inf
        assert not report.passed


class TestRunner:
    def test_empty_config(self):
        assert run_all({}) == []

    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError, match="known suites"):
            get_suite("no_such_suite")

    def test_unknown_name_stops_before_running(self):
        with pytest.raises(UnknownSuiteError):
            run_all({"deruyts": None, "no_such_suite": None})

    def test_order_is_kept(self):
        reports = run_all({"meixner": {}, "deruyts": None})
        assert [r.suite for r in reports] == ["meixner", "deruyts"]
        assert all_passed(reports)

    def test_overrides(self):
        report = run_suite("trace_check", {"eps": 0.8})
        assert report.params["eps"] == 0.8
        assert report.runtime_ms >= 0

    def test_failing_tolerance(self):
        report = run_suite("identity_limit_sweep", {"eps_list": [0.5], "tolerance": 0.01})
        assert not report.passed
        assert not all_passed([report])

    def test_names_match_defaults(self):
        assert list(default_config()) == suite_names()
        assert default_config()["trace_check"] == {"m": 1, "eps": 0.5, "n_max": 8}
        assert all(callable(getattr(PropertySuites, name)) for name in suite_names())


class TestReport:
    def test_passed_is_derived(self):
        assert VerificationReport.build("s", {}, 1e-3, 1e-9, 1e-6).passed
        assert not VerificationReport.build("s", {}, 1e-3, 1e-9, 1e-6, criterion="abs").passed

    def test_infinite_defect_fails(self):
        assert not VerificationReport.build("s", {}, math.inf, math.inf, 1.0).passed

    def test_record_timing(self):
        report = VerificationReport.build("s", {"a": 1}, 0.0, 0.0, 1.0, runtime_ms=12)
        assert report.to_record()["runtime_ms"] is None
        assert report.to_record(include_timing=True)["runtime_ms"] == 12
        assert report.to_record()["params"] == {"a": 1, "criterion": "rel"}

    def test_bad_criterion(self):
        with pytest.raises(DomainError):
            VerificationReport.build("s", {}, 0.0, 0.0, 1.0, criterion="max")


@pytest.mark.parametrize("name", suite_names())
def test_suite_passes(name):
    report = run_suite(name)
    assert report.suite == name
    assert report.passed, report.to_record()
