"""Exception hierarchy for the toolkit."""
from __future__ import annotations

from typing import Optional


class DDTError(Exception):
    """Base class for every error raised by the toolkit."""


class InvalidVertexError(DDTError, ValueError):
    """A vertex index is outside ``[0, n)``."""


class InvalidSubsetError(DDTError, ValueError):
    """A vertex set does not belong to the graph it is used with."""


class InvalidPairError(DDTError, ValueError):
    """A pair operation was called with ``x == y``."""


class InvalidSpecError(DDTError, ValueError):
    """Construction or parameter values violate their stated constraints."""


class PreconditionError(DDTError, ValueError):
    """An operation was called outside its contract."""


class UndefinedRError(DDTError, ValueError):
    """No non-negative r exists because |A| - eta*n is not positive."""


class CapabilityExceededError(DDTError):
    """An exact search was asked to run above its configured guard."""

    def __init__(self, operation: str, size: int, guard: int, hint: str):
        self.operation = operation
        self.size = size
        self.guard = guard
        self.hint = hint
        super().__init__(f"{operation}: n={size} exceeds guard {guard}; {hint}")


class EdgeListError(DDTError, ValueError):
    """Malformed edge-list input, located by line number."""

    def __init__(self, kind: str, line: Optional[int], message: str):
        self.kind = kind
        self.line = line
        location = f"line {line}: " if line is not None else ""
        super().__init__(f"{location}{kind}: {message}")


class UsageError(DDTError):
    """Command-line arguments are valid individually but not together (e.g. a missing seed)."""
