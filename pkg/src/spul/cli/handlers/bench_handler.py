"""
Bench Command Handler.
Compares BFS shortest paths with unique-label paths over one or more sources.
"""

from argparse import Namespace

from ...config.solver_config import create_solver_config
from ...io.bench_file import write_bench
from ...utils.console import bench_summary
from ...utils.exceptions import ConfigurationError
from ..bench import compute_bench
from .base_handler import EXIT_ABORTED, EXIT_OK, BaseHandler


class BenchHandler(BaseHandler):
    command = "bench"

    def handle(self, args: Namespace) -> int:
        if not args.all_sources and not args.source:
            raise ConfigurationError("bench needs --source NAME or --all-sources")
        config = create_solver_config(args)
        graph = self.load_graph(args)
        if args.all_sources:
            sources = list(range(graph.vertex_count))
        else:
            sources = [graph.vertex_id(name) for name in args.source]

        report = compute_bench(
            graph,
            sources,
            algorithm=config.algorithm,
            budget=config.budget,
            workers=config.workers,
        )
        self.write_text(write_bench(report, config.output_format), args.output)
        self.console.print(bench_summary(report))

        if report.aborted:
            self.console.print(
                "[yellow]⚠️  Budget exhausted for some sources (*), "
                "SPUL counts are lower bounds[/yellow]"
            )
            return EXIT_ABORTED
        return EXIT_OK
