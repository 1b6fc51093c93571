"""
Error categories for lccvqe.

Library code raises these; the CLI maps each category to a process exit code
so that scripted runs can tell a bad argument from an exhausted retry budget.
"""
from typing import Optional


class LccError(Exception):
    """Base class for all lccvqe errors."""

    exit_code = 1
    category = "error"


class InvalidArgumentError(LccError, ValueError):
    """An argument violates an operation's precondition."""

    exit_code = 2
    category = "invalid-argument"


class SizeLimitError(LccError):
    """The problem is too large for the requested exact method."""

    exit_code = 3
    category = "size-limit"


class RetryExhaustedError(LccError):
    """A randomized construction ran out of attempts."""

    exit_code = 4
    category = "retry-exhausted"


class UnsupportedError(LccError):
    """The requested combination is not supported (e.g. LCC on full entanglement)."""

    exit_code = 5
    category = "unsupported"


class CapacityError(LccError):
    """A circuit does not fit on the target device."""

    exit_code = 6
    category = "capacity"


class ParseError(LccError):
    """
    A file could not be parsed.

    Carries the offending field name or line number so the message points at
    the exact place to fix.
    """

    exit_code = 7
    category = "parse"

    def __init__(self, message: str, field: Optional[str] = None, line: Optional[int] = None):
        self.field = field
        self.line = line
        parts = []
        if field is not None:
            parts.append(f"field '{field}'")
        if line is not None:
            parts.append(f"line {line}")
        location = f" ({', '.join(parts)})" if parts else ""
        super().__init__(f"{message}{location}")


class ContractViolationError(LccError):
    """An input broke an internal contract, e.g. an untranspiled gate reached the noisy engine."""

    exit_code = 8
    category = "contract-violation"


class InternalConsistencyError(LccError):
    """Internal data structures disagree, e.g. an unresolvable parameter coordinate."""

    exit_code = 9
    category = "internal-consistency"
