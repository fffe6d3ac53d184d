"""
Oracle Command Handler.
Brute-force rainbow-path distances and optimal-path counts for small graphs.
"""

from argparse import Namespace

from ...oracle.rainbow import OracleLimits, enumerate_rainbow
from ...utils.console import oracle_summary
from .base_handler import EXIT_OK, BaseHandler


class OracleHandler(BaseHandler):
    command = "oracle"

    def handle(self, args: Namespace) -> int:
        limits = OracleLimits(
            max_vertices=args.max_vertices,
            max_edges=args.max_edges,
            max_labels=args.max_labels,
        )
        graph = self.load_graph(args)
        source = graph.vertex_id(args.source)
        counts = enumerate_rainbow(graph, source, limits)

        lines = ["target\tdistance\tcount"]
        lines.extend(
            f"{graph.vertex_name(vertex)}\t{entry.distance}\t{entry.count}"
            for vertex, entry in counts.items()
        )
        self.write_text("\n".join(lines) + "\n", args.output)
        self.console.print(oracle_summary(counts, graph, source))
        return EXIT_OK
