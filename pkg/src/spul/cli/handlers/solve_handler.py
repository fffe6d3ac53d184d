"""
Solve Command Handler.
Runs one shortest-feasible-path search and writes the result file.
"""

import logging
from argparse import Namespace

from ...config.solver_config import create_solver_config
from ...io.result_file import write_result
from ...search.solver import solve
from ...utils.console import solve_summary
from .base_handler import EXIT_ABORTED, EXIT_OK, BaseHandler

logger = logging.getLogger(__name__)


class SolveHandler(BaseHandler):
    command = "solve"

    def handle(self, args: Namespace) -> int:
        config = create_solver_config(args)
        graph = self.load_graph(args)
        source = graph.vertex_id(args.source)
        targets = None
        if args.target:
            targets = [graph.vertex_id(name) for name in args.target]

        result = solve(
            graph,
            source,
            targets=targets,
            algorithm=config.algorithm,
            use_preprocess=config.use_preprocess,
            budget=config.budget,
        )
        self.write_text(write_result(result, graph, config.output_format), args.output)
        self.console.print(solve_summary(result, graph))

        if result.aborted:
            self.console.print(
                "[yellow]⚠️  Budget exhausted, result is partial[/yellow]"
            )
            return EXIT_ABORTED
        return EXIT_OK
