"""Exception hierarchy shared by every module."""

from __future__ import annotations


class LexCycleError(Exception):
    """Base class for errors raised by this package."""


class GraphError(LexCycleError, ValueError):
    """A graph or ordering violates a structural precondition."""


class ParseError(LexCycleError, ValueError):
    """Malformed graph, ordering or matrix text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class BudgetExceeded(LexCycleError):
    """An iterative procedure ran out of sweeps (or passes) before settling.

    ``trace`` holds every ordering (or matrix) computed so far, so callers can
    inspect the partial run.
    """

    def __init__(self, message: str, trace: list | None = None):
        super().__init__(message)
        self.trace = list(trace or [])


class CapExceeded(LexCycleError):
    """An exhaustive search hit its size cap; ``lower_bound`` is still valid."""

    def __init__(self, message: str, lower_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound
