"""
Base handler class providing common interface for all command handlers.
"""

import logging
from abc import ABC, abstractmethod
from argparse import Namespace
from pathlib import Path
from typing import List, Optional, TextIO

from rich.console import Console

from ...graph.model import LabeledDigraph
from ...graph.transform import with_reverse_edges, without_vertices
from ...io.edge_list import parse_edge_list, parse_name_list
from ...utils.exceptions import InputParseError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_ABORTED = 2


class BaseHandler(ABC):
    """
    One subcommand. `console` receives human-facing output (stderr),
    `out` receives result data (stdout) when no output file is given.
    """

    command: str = ""

    def __init__(self, console: Console, out: TextIO):
        self.console = console
        self.out = out

    def can_handle(self, command: str) -> bool:
        """Check if this handler can process the given subcommand"""
        return command == self.command

    @abstractmethod
    def handle(self, args: Namespace) -> int:
        """Run the subcommand and return its exit code"""
        pass

    def read_text(self, path: str) -> str:
        try:
            return Path(path).read_text(encoding="utf-8")
        except OSError as e:
            raise InputParseError(f"cannot read {path}: {e.strerror or e}") from e
        except UnicodeDecodeError as e:
            raise InputParseError(
                f"cannot read {path}: not UTF-8 text (byte {e.start})"
            ) from e

    def write_text(self, text: str, path: Optional[str] = None) -> None:
        """Write to `path`, or to standard output when no path is given."""
        if path is None:
            self.out.write(text)
            return
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as e:
            raise InputParseError(f"cannot write {path}: {e.strerror or e}") from e
        logger.info(f"Wrote {path}")

    def load_graph(self, args: Namespace) -> LabeledDigraph:
        """Parse --graph, then apply --reversible and --exclude/--exclude-file."""
        graph, diagnostics = parse_edge_list(self.read_text(args.graph))
        for diagnostic in diagnostics:
            self.console.print(f"[yellow]⚠️  {args.graph}: {diagnostic}[/yellow]")

        if getattr(args, "reversible", False):
            graph = with_reverse_edges(graph)
        excluded: List[str] = list(getattr(args, "exclude", None) or [])
        exclude_file = getattr(args, "exclude_file", None)
        if exclude_file:
            excluded.extend(parse_name_list(self.read_text(exclude_file)))
        if excluded:
            graph = without_vertices(graph, excluded)
        return graph
