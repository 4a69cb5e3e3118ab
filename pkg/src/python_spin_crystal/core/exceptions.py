from typing import List, Optional


class SpinCrystalKnownException(Exception):
    """
    Base of every error the library raises on purpose.
    The exit code is what the command line reports for it; fatal exceptions stop a
    suite run, non-fatal ones only mark the suite as skipped.
    """

    def __init__(self, message: str = "", exit_code: int = 2, fatal: bool = True):
        super().__init__(message)
        self._exit_code = exit_code
        self._is_fatal = fatal

    @property
    def exit_code(self) -> int:
        return self._exit_code

    @property
    def is_fatal(self) -> bool:
        return self._is_fatal


class InvalidResidueError(SpinCrystalKnownException):
    ...


class InvalidPartitionError(SpinCrystalKnownException):
    ...


class UnsupportedRangeError(SpinCrystalKnownException):
    ...


class UndefinedInputError(SpinCrystalKnownException):
    ...


class FixtureParseError(SpinCrystalKnownException):
    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class CheckSkipped(SpinCrystalKnownException):
    def __init__(self, reason: str = "not applicable"):
        super().__init__(reason, exit_code=0, fatal=False)


class CheckFailed(SpinCrystalKnownException):
    def __init__(self, suite_name: str, violations: Optional[List[str]] = None):
        self.violations: List[str] = list(violations or [])
        super().__init__(
            f"{suite_name}: {len(self.violations)} violation(s)", exit_code=1
        )
