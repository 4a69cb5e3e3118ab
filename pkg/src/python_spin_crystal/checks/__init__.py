from python_spin_crystal.checks.check_suite import CheckSuite, SuiteInputs, SuiteStatus
from python_spin_crystal.checks.suite_graph import SuiteGraph
from python_spin_crystal.checks.suite_runner import SuiteRunner, SuiteRunReport
from python_spin_crystal.checks.suites import SUITE_CHOICES, build_suite_graph

__all__ = [
    "CheckSuite",
    "SuiteInputs",
    "SuiteStatus",
    "SuiteGraph",
    "SuiteRunner",
    "SuiteRunReport",
    "SUITE_CHOICES",
    "build_suite_graph",
]
