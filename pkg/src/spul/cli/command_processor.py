"""
Command Processor for the SPUL toolkit.
Routes parsed subcommands to the appropriate handlers.
"""

import logging
from argparse import Namespace
from typing import List, Optional

from rich.console import Console

from ..utils.exceptions import SpulError
from .handlers.base_handler import BaseHandler

logger = logging.getLogger(__name__)


class CommandProcessingError(Exception):
    """Error during command processing."""

    pass


class NoHandlerFoundError(CommandProcessingError):
    """No handler could process the command."""

    pass


class CommandProcessor:
    """
    Routes each parsed command to the first handler that accepts it.
    """

    def __init__(self, handlers: List[BaseHandler], console: Console):
        self.handlers = handlers
        self.console = console

    def process_command(self, args: Namespace) -> int:
        """
        Run the handler for `args.command`.

        Returns:
            The handler's exit code

        Raises:
            NoHandlerFoundError: If no handler accepts the command
            SpulError: Input, configuration and domain errors, unchanged
            CommandProcessingError: If a handler fails unexpectedly
        """
        command = getattr(args, "command", None)

        handler = self.get_handler_for_command(command)
        if handler is None:
            raise NoHandlerFoundError(f"No handler found for command: '{command}'")

        handler_name = handler.__class__.__name__
        logger.debug(f"Routing '{command}' to {handler_name}")
        try:
            exit_code = handler.handle(args)
        except SpulError:
            raise
        except Exception as e:
            raise CommandProcessingError(
                f"Handler {handler_name} failed to process command: {e}"
            ) from e

        logger.debug(f"{handler_name} finished with exit code {exit_code}")
        return exit_code

    def get_handler_for_command(self, command: Optional[str]) -> Optional[BaseHandler]:
        if command is None:
            return None
        for handler in self.handlers:
            if handler.can_handle(command):
                return handler
        return None

    def __repr__(self) -> str:
        return f"CommandProcessor(commands={[h.command for h in self.handlers]})"
