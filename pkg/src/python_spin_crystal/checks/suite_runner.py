import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterator, List, Optional, Set

from python_spin_crystal.checks.check_suite import CheckSuite, SuiteInputs, SuiteStatus
from python_spin_crystal.checks.suite_graph import SuiteGraph

BASE_LOGGER = logging.getLogger(__name__)


@dataclass
class SuiteRunReport:
    statuses: Dict[str, SuiteStatus] = field(default_factory=dict)
    violations: Dict[str, List[str]] = field(default_factory=dict)
    reasons: Dict[str, str] = field(default_factory=dict)
    order: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(
            status in (SuiteStatus.PASSED, SuiteStatus.SKIPPED)
            for status in self.statuses.values()
        )

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> Dict[str, object]:
        return {
            "ok": self.ok,
            "order": self.order,
            "suites": {
                name: {
                    "status": status.value,
                    "reason": self.reasons.get(name, ""),
                    "violations": self.violations.get(name, []),
                }
                for name, status in sorted(self.statuses.items())
            },
        }


class SuiteRunner:
    """
    Runs the suites of a SuiteGraph, starting any suite whose prerequisites have all
    passed or been skipped. A suite with a failed (or not run) prerequisite is
    marked as not run, so one failure stops everything downstream of it.
    """

    def __init__(
        self,
        suite_graph: SuiteGraph,
        inputs: SuiteInputs,
        on_complete: Optional[Callable[[CheckSuite], None]] = None,
    ):
        self._suite_graph = suite_graph
        self._inputs = inputs
        self._suite_graph.validate()
        self._completed: Set[CheckSuite] = set()
        self._blocked: Set[CheckSuite] = set()
        self.started_suites: Set[CheckSuite] = set()
        self._order: List[str] = []
        self._on_complete = on_complete
        self._logger = BASE_LOGGER.getChild(self.__class__.__name__)
        for suite in self._suite_graph.graph.keys():
            suite.add_complete_callback(self.finish_suite)

    """
    Callback for a suite to report back to the runner once it has finished, whether
    it passed or not.
    """

    def finish_suite(self, suite: CheckSuite) -> None:
        self._order.append(suite.name)
        if suite.passed or suite.skipped:
            self._completed.add(suite)
        else:
            self._block_dependents_of(suite)
        if self._on_complete:
            self._on_complete(suite)

    def _block_dependents_of(self, failed: CheckSuite) -> None:
        for suite, dependencies in self._suite_graph.graph.items():
            if failed in dependencies and suite not in self._blocked:
                self._blocked.add(suite)
                suite.mark_not_run(f"depends on {failed.name}, which did not pass")
                self._block_dependents_of(suite)

    @property
    def is_complete(self) -> bool:
        return all(
            suite.complete or suite in self._blocked
            for suite in self._suite_graph.graph.keys()
        )

    def give_valid_suites(self) -> Iterator[CheckSuite]:
        # by name so that runs are reproducible
        ready = [
            suite
            for suite in self._suite_graph.graph.keys()
            if suite not in self.started_suites
            and suite not in self._blocked
            and self._suite_graph.graph[suite].issubset(self._completed)
        ]
        return iter(sorted(ready, key=lambda suite: suite.name))

    def run(self) -> SuiteRunReport:
        while not self.is_complete:
            ready = list(self.give_valid_suites())
            if not ready:
                break
            for suite in ready:
                self.started_suites.add(suite)
                suite.execute(self._inputs)
        report = SuiteRunReport(order=list(self._order))
        for suite in self._suite_graph.graph.keys():
            report.statuses[suite.name] = suite.status
            report.violations[suite.name] = suite.violations
            report.reasons[suite.name] = suite.reason
        self._logger.info(
            f"Ran {len(self._order)} of {len(self._suite_graph)} suites, "
            f"ok={report.ok}"
        )
        return report


def run_suites(
    suite_graph: SuiteGraph,
    inputs: SuiteInputs,
    on_complete: Optional[Callable[[CheckSuite], None]] = None,
) -> SuiteRunReport:
    return SuiteRunner(suite_graph, inputs, on_complete).run()
