"""
Custom Exceptions for the SPUL toolkit.
Defines application-specific exception classes.
"""

from typing import Sequence


class SpulError(Exception):
    """Base exception for the SPUL toolkit."""

    pass


class ConfigurationError(SpulError):
    """Invalid budgets, limits, formats or worker counts."""

    pass


class GraphError(SpulError):
    """Graph lookup and path validation errors."""

    pass


class UnknownVertexError(GraphError):
    """A vertex name does not occur in the graph."""

    def __init__(self, name: str, suggestions: Sequence[str] = ()):
        self.name = name
        self.suggestions = tuple(suggestions)
        message = f"unknown vertex '{name}'"
        if self.suggestions:
            message += f" (did you mean: {', '.join(self.suggestions)}?)"
        super().__init__(message)


class InvalidPathError(GraphError):
    """An edge sequence is not a connected path with pairwise-distinct labels."""

    pass


class InputParseError(SpulError):
    """Malformed input file. Carries the diagnostics collected so far."""

    def __init__(self, message: str, diagnostics: Sequence = ()):
        super().__init__(message)
        self.diagnostics = list(diagnostics)


class EdgeListParseError(InputParseError):
    pass


class DimacsParseError(InputParseError):
    pass


class ResultFileParseError(InputParseError):
    pass


class MapFileParseError(InputParseError):
    pass


class OracleLimitError(SpulError):
    """Brute-force enumeration refused because an input exceeds a limit."""

    def __init__(self, limit: str, value: int, maximum: int):
        self.limit = limit
        self.value = value
        self.maximum = maximum
        super().__init__(f"{limit} = {value} exceeds oracle limit {maximum}")


class ReductionError(SpulError):
    """Invalid SAT instance or reduction bookkeeping."""

    pass


class DecodeError(ReductionError):
    """A path cannot be decoded into a truth assignment."""

    pass
