"""
Line-numbered parser diagnostics.
"""

from dataclasses import dataclass
from enum import Enum


class Severity(str, Enum):
    WARNING = "warning"
    ERROR = "error"


@dataclass(frozen=True)
class ParseDiagnostic:
    """A message tied to a 1-based input line. Errors abort parsing."""

    line: int
    message: str
    severity: Severity = Severity.WARNING

    def __str__(self) -> str:
        return f"line {self.line}: {self.severity.value}: {self.message}"
