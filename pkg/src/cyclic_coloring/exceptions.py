"""Exception types shared across the package."""


class CyclicColoringError(Exception):
    """Base class for all package errors."""


class InvalidEmbedding(CyclicColoringError, ValueError):
    """The rotation system is not a loopless connected sphere embedding."""


class PreconditionError(CyclicColoringError, ValueError):
    """An operation was called on a graph outside its domain."""


class HypothesisError(PreconditionError):
    """A bound was requested for a graph that does not satisfy its hypotheses."""


class GuardExceeded(CyclicColoringError):
    """An exact search was refused because the instance is too large."""


class InfeasibleBudget(CyclicColoringError):
    """Exhaustive search found no coloring within the requested number of colors."""


class ParseError(CyclicColoringError, ValueError):
    """Malformed graph text file.

    Attributes:
        line: 1-based line number of the offending line, or None when the
            problem is global to the file (e.g. an edge id count).
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
