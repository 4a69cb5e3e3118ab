import logging
from abc import abstractmethod
from dataclasses import dataclass
from enum import Enum
from time import time
from typing import Callable, List

from python_spin_crystal.core.cartan import CartanType
from python_spin_crystal.core.exceptions import (
    CheckFailed,
    CheckSkipped,
    SpinCrystalKnownException,
)

BASE_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SuiteInputs:
    ct: CartanType
    max_n: int


class SuiteStatus(Enum):
    PENDING = "pending"
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
    NOT_RUN = "not run"


class CheckSuite:
    """
    A named group of consistency checks over every partition up to a degree.
    Suites do not know which other suites they depend on: that is held by the
    SuiteGraph they are part of, and the SuiteRunner only starts a suite once
    everything it depends on has passed (or been skipped).
    A suite reports its violations as strings; raising CheckSkipped marks it as not
    applicable to the inputs, and any other exception fails it.
    """

    def __init__(self, name: str):
        self._name = name
        self._logger = BASE_LOGGER.getChild(self.__class__.__name__).getChild(name)
        self._violations: List[str] = []
        self._status = SuiteStatus.PENDING
        self._reason = ""
        self._callbacks: List[Callable[["CheckSuite"], None]] = []

    @property
    def name(self) -> str:
        return self._name

    @property
    def violations(self) -> List[str]:
        return list(self._violations)

    @property
    def status(self) -> SuiteStatus:
        return self._status

    @property
    def reason(self) -> str:
        return self._reason

    @property
    def complete(self) -> bool:
        return self._status is not SuiteStatus.PENDING

    @property
    def passed(self) -> bool:
        return self._status is SuiteStatus.PASSED

    @property
    def skipped(self) -> bool:
        return self._status is SuiteStatus.SKIPPED

    def __str__(self) -> str:
        return f"{self.name}: {self._status.value}"

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}({self.name!r})"

    def add_complete_callback(self, callback: Callable[["CheckSuite"], None]) -> None:
        self._callbacks.append(callback)

    def execute(self, inputs: SuiteInputs) -> SuiteStatus:
        self._logger.info(f"Suite {self.name} began at {time()}")
        self._logger.debug(f"Suite {self.name} began with {inputs}")
        try:
            self._violations = list(self._run_suite(inputs))
            if self._violations:
                raise CheckFailed(self.name, self._violations)
            self._finish(SuiteStatus.PASSED)
        except Exception as exc:
            self._fail(exc)
        return self._status

    @abstractmethod
    def _run_suite(self, inputs: SuiteInputs) -> List[str]:
        ...

    def mark_not_run(self, reason: str) -> None:
        self._reason = reason
        self._status = SuiteStatus.NOT_RUN
        self._logger.warning(f"Suite {self.name} not run: {reason}")

    def _fail(self, exc: Exception) -> None:
        # anything unanticipated is a failure
        if not isinstance(exc, SpinCrystalKnownException):
            self._logger.exception(f"Suite {self.name}: unexpected exception {exc!r}")
            self._violations.append(f"unexpected exception: {exc!r}")
            exc = CheckFailed(self.name, self._violations)
        self._reason = str(exc)
        if isinstance(exc, CheckSkipped) or not exc.is_fatal:
            self._finish(SuiteStatus.SKIPPED)
            return
        if not self._violations:
            self._violations.append(str(exc))
        for violation in self._violations:
            self._logger.error(f"Suite {self.name}: {violation}")
        self._finish(SuiteStatus.FAILED)

    def _finish(self, status: SuiteStatus) -> None:
        self._status = status
        self._logger.info(f"Suite {self.name} {status.value} at {time()}")
        for callback in self._callbacks:
            callback(self)
