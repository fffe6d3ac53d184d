"""
DIMACS CNF reader and writer.

Header `p cnf <variables> <clauses>`, then zero-terminated clauses that may
span lines. `c` lines are comments; a `%` line ends the input (SATLIB files).
"""

import logging
from typing import List, Optional

from ..reduction.instance import SatInstance
from ..utils.exceptions import DimacsParseError
from .diagnostics import ParseDiagnostic, Severity

logger = logging.getLogger(__name__)


def _fail(line: int, message: str) -> DimacsParseError:
    diagnostic = ParseDiagnostic(line, message, Severity.ERROR)
    return DimacsParseError(str(diagnostic), [diagnostic])


def parse_dimacs(text: str) -> SatInstance:
    """
    Parse a DIMACS CNF document. Clause widths of 1 and more are accepted.

    Raises:
        DimacsParseError: missing/malformed header, non-integer token,
            literal out of range, empty clause or unterminated last clause
    """
    num_variables: Optional[int] = None
    declared_clauses = 0
    clauses: List[tuple] = []
    current: List[int] = []
    clause_start = 0
    last_line = 0

    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        last_line = number
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            fields = line.split()
            if num_variables is not None:
                raise _fail(number, "duplicate problem line")
            if len(fields) != 4 or fields[1] != "cnf":
                raise _fail(number, "expected 'p cnf <variables> <clauses>'")
            try:
                num_variables, declared_clauses = int(fields[2]), int(fields[3])
            except ValueError:
                raise _fail(number, "header counts must be integers") from None
            if num_variables < 0 or declared_clauses < 0:
                raise _fail(number, "header counts must be nonnegative")
            continue
        if num_variables is None:
            raise _fail(number, "clause before 'p cnf' header")

        for token in line.split():
            try:
                literal = int(token)
            except ValueError:
                raise _fail(number, f"'{token}' is not an integer literal") from None
            if literal == 0:
                if not current:
                    raise _fail(number, "empty clause")
                clauses.append(tuple(current))
                current = []
                continue
            if abs(literal) > num_variables:
                raise _fail(
                    number, f"literal {literal} out of range 1..{num_variables}"
                )
            if not current:
                clause_start = number
            current.append(literal)

    if num_variables is None:
        raise _fail(max(last_line, 1), "missing 'p cnf' header")
    if current:
        raise _fail(clause_start, "clause not terminated by 0")
    if len(clauses) != declared_clauses:
        logger.warning(
            f"Header declares {declared_clauses} clauses, found {len(clauses)}"
        )
    return SatInstance(num_variables=num_variables, clauses=tuple(clauses))


def write_dimacs(instance: SatInstance) -> str:
    lines = [f"p cnf {instance.num_variables} {instance.num_clauses}"]
    lines.extend(
        " ".join(str(lit) for lit in clause) + " 0" for clause in instance.clauses
    )
    return "\n".join(lines) + "\n"
