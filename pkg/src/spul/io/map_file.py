"""
Reduction map sidecar files.

Written by `reduce` next to the encoded graph, read back by `decode`:

    # spul reduction map
    variables<TAB>2
    clause<TAB>1 2
    clause<TAB>-1 -2
    positive<TAB>1<TAB>0 1
    negative<TAB>1<TAB>2 3
    ...

The clauses are enough to rebuild the encoding; the chain edge ids are
recorded so a map that does not belong to the current encoder is rejected.
"""

import logging
from typing import Dict, List, Tuple

from ..reduction.encoder import ReductionMap, encode
from ..reduction.instance import SatInstance
from ..utils.exceptions import MapFileParseError, ReductionError
from .diagnostics import ParseDiagnostic, Severity

logger = logging.getLogger(__name__)

MAP_HEADER = "# spul reduction map"


def _ids(chain: Tuple[int, ...]) -> str:
    return " ".join(str(eid) for eid in chain)


def write_map(rmap: ReductionMap) -> str:
    instance = rmap.instance
    lines = [MAP_HEADER, f"variables\t{instance.num_variables}"]
    lines.extend(
        "clause\t" + " ".join(str(lit) for lit in clause) for clause in instance.clauses
    )
    for j, (positive, negative) in enumerate(
        zip(rmap.positive_chains, rmap.negative_chains), start=1
    ):
        lines.append(f"positive\t{j}\t{_ids(positive)}")
        lines.append(f"negative\t{j}\t{_ids(negative)}")
    return "\n".join(lines) + "\n"


def _fail(line: int, message: str) -> MapFileParseError:
    diagnostic = ParseDiagnostic(line, message, Severity.ERROR)
    return MapFileParseError(str(diagnostic), [diagnostic])


def _int_list(text: str, line: int) -> List[int]:
    try:
        return [int(token) for token in text.split()]
    except ValueError:
        raise _fail(line, f"expected integers, got '{text}'") from None


def read_map(text: str) -> ReductionMap:
    """
    Parse a map file and rebuild its ReductionMap.

    Raises:
        MapFileParseError: on malformed lines, an invalid formula, or chain
            edge ids that differ from a fresh encoding of the formula
    """
    num_variables = None
    clauses: List[Tuple[int, ...]] = []
    recorded: Dict[Tuple[str, int], Tuple[List[int], int]] = {}

    for number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        kind = fields[0]
        if kind == "variables" and len(fields) == 2:
            values = _int_list(fields[1], number)
            if len(values) != 1:
                raise _fail(number, "expected a single variable count")
            num_variables = values[0]
        elif kind == "clause" and len(fields) == 2:
            clauses.append(tuple(_int_list(fields[1], number)))
        elif kind in ("positive", "negative") and len(fields) == 3:
            variable = _int_list(fields[1], number)
            if len(variable) != 1:
                raise _fail(number, "expected a single variable index")
            recorded[(kind, variable[0])] = (_int_list(fields[2], number), number)
        else:
            raise _fail(number, f"unrecognized map line '{line}'")

    if num_variables is None:
        raise _fail(1, "missing 'variables' line")
    try:
        rmap = encode(SatInstance(num_variables=num_variables, clauses=tuple(clauses)))
    except ReductionError as e:
        raise _fail(1, f"invalid formula: {e}") from e

    for j in range(1, num_variables + 1):
        for kind, chains in (
            ("positive", rmap.positive_chains),
            ("negative", rmap.negative_chains),
        ):
            if (kind, j) not in recorded:
                raise _fail(1, f"missing {kind} chain for variable {j}")
            ids, number = recorded.pop((kind, j))
            if tuple(ids) != chains[j - 1]:
                raise _fail(
                    number, f"{kind} chain of variable {j} does not match the encoding"
                )
    if recorded:
        (kind, j), (_, number) = next(iter(recorded.items()))
        raise _fail(number, f"{kind} chain for unknown variable {j}")

    logger.debug(f"Map file rebuilt {rmap.graph!r}")
    return rmap
