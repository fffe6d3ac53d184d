# System and external dependencies
import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from rich.console import Console

# Internal modules (relative imports)
from .cli.controller import create_cli_controller
from .config.logging_config import setup_logging
from .config.solver_config import DEFAULT_ALGORITHM, DEFAULT_FORMAT, DEFAULT_WORKERS
from .oracle.rainbow import OracleLimits

EXIT_USAGE = 1


class SpulArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1 like every other input error."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_graph_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", required=True, help="edge-list file (TSV)")
    parser.add_argument(
        "--exclude",
        action="append",
        metavar="NAME",
        help="drop every edge touching this vertex (repeatable)",
    )
    parser.add_argument(
        "--exclude-file", metavar="FILE", help="vertices to drop, one per line"
    )
    parser.add_argument(
        "--reversible",
        action="store_true",
        help="add the reverse of every edge with the same label",
    )


def _add_search_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--algorithm", choices=["a", "b"], default=DEFAULT_ALGORITHM, type=str.lower
    )
    parser.add_argument(
        "--max-nodes", type=int, metavar="N", help="search-tree node budget"
    )
    parser.add_argument("--max-queue", type=int, metavar="N", help="queue budget")
    parser.add_argument("--output", metavar="FILE", help="write here instead of stdout")
    parser.add_argument("--format", choices=["tsv", "json"], default=DEFAULT_FORMAT)


def build_parser() -> argparse.ArgumentParser:
    parser = SpulArgumentParser(
        prog="spul", description="Shortest paths with unique labels"
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    parser.add_argument("--log-dir", type=Path, help="also log to a file here")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    solve = commands.add_parser("solve", help="shortest feasible paths from a source")
    _add_graph_arguments(solve)
    _add_search_arguments(solve)
    solve.add_argument("--source", required=True, metavar="NAME")
    solve.add_argument("--target", action="append", metavar="NAME")
    solve.add_argument(
        "--preprocess", action="store_true", help="answer from BFS paths first"
    )

    bench = commands.add_parser("bench", help="BFS vs. unique-label path statistics")
    _add_graph_arguments(bench)
    _add_search_arguments(bench)
    sources = bench.add_mutually_exclusive_group()
    sources.add_argument("--source", action="append", metavar="NAME")
    sources.add_argument("--all-sources", action="store_true")
    bench.add_argument("--workers", type=int, default=DEFAULT_WORKERS, metavar="N")

    reduce = commands.add_parser("reduce", help="encode a DIMACS CNF formula")
    reduce.add_argument("--cnf", required=True)
    reduce.add_argument("--graph-out", required=True)
    reduce.add_argument("--map-out", required=True)

    decode = commands.add_parser("decode", help="read an assignment off a result")
    decode.add_argument("--map", required=True)
    decode.add_argument("--result", required=True)

    limits = OracleLimits()
    oracle = commands.add_parser("oracle", help="brute-force distances and counts")
    _add_graph_arguments(oracle)
    oracle.add_argument("--source", required=True, metavar="NAME")
    oracle.add_argument("--max-vertices", type=int, default=limits.max_vertices)
    oracle.add_argument("--max-edges", type=int, default=limits.max_edges)
    oracle.add_argument("--max-labels", type=int, default=limits.max_labels)
    oracle.add_argument("--output", metavar="FILE")
    return parser


def main(
    argv: Optional[Sequence[str]] = None,
    console: Optional[Console] = None,
    out: Optional[TextIO] = None,
) -> int:
    """Main entry point for the CLI application."""
    args = build_parser().parse_args(argv)
    setup_logging(args.verbose, args.log_dir)

    cli = create_cli_controller(console=console, out=out, debug_mode=args.verbose)
    return cli.run(args)


if __name__ == "__main__":
    sys.exit(main())
