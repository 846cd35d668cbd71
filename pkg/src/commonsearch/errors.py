"""Exception hierarchy.

Each class carries the process exit code the command line uses for it.
"""


class CommonSearchError(Exception):
    exit_code = 5


class CapacityError(CommonSearchError):
    """Register wider than the simulator is willing to allocate."""

    exit_code = 3


class WiringError(CommonSearchError, ValueError):
    """Qubit indices or register widths that do not fit together."""

    exit_code = 5


class InvalidStateError(CommonSearchError, ValueError):
    exit_code = 5


class DomainError(CommonSearchError, ValueError):
    """Argument outside the domain of a closed-form expression."""

    exit_code = 5


class NoCommonEntriesError(DomainError):
    """Raised when a schedule is requested for an instance with M_c = 0."""

    exit_code = 4


class InstanceParseError(CommonSearchError, ValueError):
    exit_code = 2


class InvariantViolation(CommonSearchError, AssertionError):
    exit_code = 5
