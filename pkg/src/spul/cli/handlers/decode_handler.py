"""
Decode Command Handler.
Turns the s-t row of a result file back into a truth assignment.
"""

import logging
from argparse import Namespace
from typing import List, Optional

from ...io.map_file import read_map
from ...io.result_file import ResultRow, read_result
from ...reduction.encoder import ReductionMap, decode_named_path
from ...search.results import TargetStatus
from .base_handler import EXIT_OK, BaseHandler

logger = logging.getLogger(__name__)

WITNESS_ABSENT = "UNSAT-WITNESS-ABSENT"


def find_witness_row(rmap: ReductionMap, rows: List[ResultRow]) -> Optional[ResultRow]:
    """The found row for t whose path starts at s, if the result has one."""
    graph = rmap.graph
    source, sink = graph.vertex_name(rmap.source), graph.vertex_name(rmap.sink)
    for row in rows:
        if (
            row.target == sink
            and row.status is TargetStatus.FOUND
            and row.vertex_sequence
            and row.vertex_sequence[0] == source
        ):
            return row
    return None


class DecodeHandler(BaseHandler):
    command = "decode"

    def handle(self, args: Namespace) -> int:
        rmap = read_map(self.read_text(args.map))
        rows = read_result(self.read_text(args.result))

        row = find_witness_row(rmap, rows)
        if row is None:
            logger.info("Result has no s-t witness")
            self.write_text(WITNESS_ABSENT + "\n")
            return EXIT_OK

        assignment = decode_named_path(
            rmap, row.vertex_sequence or [], row.label_sequence or []
        )
        self.write_text(
            "".join(
                f"x{j}={'true' if value else 'false'}\n"
                for j, value in enumerate(assignment, start=1)
            )
        )
        return EXIT_OK
