"""
Main CLI Controller for the SPUL toolkit.
Wires the handlers together and turns failures into exit codes.
"""

import logging
import sys
from argparse import Namespace
from typing import Optional, TextIO

from rich.console import Console

from ..utils.console import create_console
from ..utils.exceptions import SpulError
from .command_processor import (
    CommandProcessingError,
    CommandProcessor,
    NoHandlerFoundError,
)
from .handlers.base_handler import EXIT_ERROR
from .handlers.bench_handler import BenchHandler
from .handlers.decode_handler import DecodeHandler
from .handlers.oracle_handler import OracleHandler
from .handlers.reduce_handler import ReduceHandler
from .handlers.solve_handler import SolveHandler

logger = logging.getLogger(__name__)


class CLIError(Exception):
    """Base exception for CLI controller errors."""

    pass


class CLIInitializationError(CLIError):
    """Error during CLI initialization."""

    pass


class CLIController:
    """
    Runs one parsed command line.

    Exit codes: 0 success, 1 input or usage error, 2 budget-aborted
    partial result.
    """

    def __init__(
        self,
        console: Optional[Console] = None,
        out: Optional[TextIO] = None,
        debug_mode: bool = False,
    ):
        """
        Args:
            console: Rich console for summaries and errors (stderr if None)
            out: stream for result data (stdout if None)
            debug_mode: print tracebacks for errors
        """
        self.console = console or create_console()
        self.out = out if out is not None else sys.stdout
        self.debug_mode = debug_mode

        try:
            self._initialize_handlers()
            self.command_processor = CommandProcessor(self.handlers, self.console)
        except Exception as e:
            raise CLIInitializationError(f"Failed to initialize CLI: {e}") from e

    def _initialize_handlers(self):
        self.handlers = [
            handler(self.console, self.out)
            for handler in (
                SolveHandler,
                BenchHandler,
                ReduceHandler,
                DecodeHandler,
                OracleHandler,
            )
        ]

    def run(self, args: Namespace) -> int:
        try:
            return self.command_processor.process_command(args)
        except SpulError as e:
            self._report(f"{e}")
        except NoHandlerFoundError as e:
            self._report(f"No handler available: {e}")
        except CommandProcessingError as e:
            self._report(f"Command processing error: {e}")
        except KeyboardInterrupt:
            self.console.print("\n🛑 Interrupted")
        return EXIT_ERROR

    def _report(self, message: str) -> None:
        self.console.print(f"[red]❌ {message}[/red]")
        if self.debug_mode:
            self.console.print_exception()


def create_cli_controller(
    console: Optional[Console] = None,
    out: Optional[TextIO] = None,
    debug_mode: bool = False,
) -> CLIController:
    """
    Factory function to create a CLI controller with all dependencies.

    Args:
        console: Rich console instance (optional)
        out: data stream (optional)
        debug_mode: Enable debug mode

    Returns:
        Configured CLIController instance
    """
    try:
        return CLIController(console=console, out=out, debug_mode=debug_mode)
    except CLIInitializationError as e:
        (console or create_console()).print(
            f"[red]❌ Failed to create CLI controller: {e}[/red]"
        )
        raise
