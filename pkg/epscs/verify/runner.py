"""
Suite runner.
"""
import logging
import time
from typing import Any, Dict, List, Mapping, Optional

from ..data_classes import VerificationReport
from ..exceptions import UnknownSuiteError
from .suites import PropertySuites, suite_defaults, suite_names

logger = logging.getLogger(__name__)

SuiteConfig = Mapping[str, Optional[Dict[str, Any]]]


def get_suite(name: str):
    """
    Look up a suite by name.

    Raises:
        UnknownSuiteError: If no suite has that name
    """
    if name not in suite_names():
        raise UnknownSuiteError(f"unknown suite {name!r}; known suites: {', '.join(suite_names())}")
    return getattr(PropertySuites, name)


def run_suite(name: str, overrides: Optional[Dict[str, Any]] = None) -> VerificationReport:
    """
    Run one suite and stamp its wall-clock duration on the report.

    Args:
        name: Suite identifier
        overrides: Keyword parameters replacing the suite defaults

    Returns:
        The suite's report
    """
    suite = get_suite(name)
    logger.info("suite %s: start", name)
    start = time.perf_counter()
    report = suite(**(overrides or {}))
    report.runtime_ms = int(round((time.perf_counter() - start) * 1000.0))
    if report.passed:
        logger.info("suite %s: passed (defect %.3e, tolerance %.1e)", name,
                    report.defect_abs if report.criterion == "abs" else report.defect_rel, report.tolerance)
    else:
        logger.warning("suite %s: FAILED (abs %.3e, rel %.3e, tolerance %.1e)", name,
                       report.defect_abs, report.defect_rel, report.tolerance)
    return report


def run_all(config: SuiteConfig) -> List[VerificationReport]:
    """
    Run the suites a config names, in the config's order.

    Every name is validated before the first suite starts, so an unknown
    name never leaves a partial run behind.

    Args:
        config: Mapping of suite name to parameter overrides (None or {} for defaults)

    Returns:
        One report per suite

    Raises:
        UnknownSuiteError: If a name is not a registered suite
    """
    for name in config:
        get_suite(name)
    return [run_suite(name, overrides) for name, overrides in config.items()]


def default_config() -> Dict[str, Dict[str, Any]]:
    """Every registered suite with its default parameters."""
    return suite_defaults()


def all_passed(reports: List[VerificationReport]) -> bool:
    return all(report.passed for report in reports)
