"""
Verification drivers: the epsilon-identity matrix, limit sweeps and property suites.
"""
from .identity import identity_limit_sweep, identity_matrix, trace_estimate
from .runner import all_passed, default_config, get_suite, run_all, run_suite
from .suites import PropertySuites, suite_names

__all__ = [
    "identity_limit_sweep",
    "identity_matrix",
    "trace_estimate",
    "all_passed",
    "default_config",
    "get_suite",
    "run_all",
    "run_suite",
    "PropertySuites",
    "suite_names",
]
