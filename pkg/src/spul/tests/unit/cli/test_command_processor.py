"""
Unit test suite for the CommandProcessor class.
Uses pure pytest with small handler doubles instead of mocks.
"""

from argparse import Namespace
from io import StringIO

import pytest
from rich.console import Console

from spul.cli.command_processor import (
    CommandProcessingError,
    CommandProcessor,
    NoHandlerFoundError,
)
from spul.cli.handlers.base_handler import BaseHandler
from spul.utils.exceptions import ConfigurationError


class RecordingHandler(BaseHandler):
    """Handler double that records its calls and returns a fixed exit code."""

    command = "alpha"

    def __init__(self, exit_code=0, error=None):
        super().__init__(Console(file=StringIO()), StringIO())
        self.exit_code = exit_code
        self.error = error
        self.handled = []

    def handle(self, args):
        self.handled.append(args)
        if self.error is not None:
            raise self.error
        return self.exit_code


class OtherHandler(RecordingHandler):
    command = "beta"


@pytest.fixture
def console():
    """Provide a console that captures output."""
    return Console(file=StringIO(), force_terminal=False)


@pytest.fixture
def handler():
    return RecordingHandler()


@pytest.fixture
def processor(console, handler):
    return CommandProcessor([handler, OtherHandler()], console)


class TestCommandProcessorInitialization:
    """Test CommandProcessor initialization."""

    def test_keeps_handler_order(self, processor, handler):
        assert processor.handlers[0] is handler
        assert repr(processor) == "CommandProcessor(commands=['alpha', 'beta'])"

    def test_empty_handlers(self, console):
        processor = CommandProcessor([], console)

        assert processor.get_handler_for_command("alpha") is None


class TestCommandRouting:
    """Test routing parsed commands to handlers."""

    def test_routes_by_command_name(self, processor, handler):
        """The handler whose command matches receives the namespace."""
        args = Namespace(command="alpha")

        assert processor.process_command(args) == 0
        assert handler.handled == [args]

    def test_second_handler(self, console):
        first, second = RecordingHandler(), OtherHandler(exit_code=2)
        processor = CommandProcessor([first, second], console)

        assert processor.process_command(Namespace(command="beta")) == 2
        assert first.handled == []

    def test_unknown_command(self, processor):
        with pytest.raises(NoHandlerFoundError):
            processor.process_command(Namespace(command="gamma"))

    def test_missing_command(self, processor):
        """A namespace without a command never reaches a handler."""
        with pytest.raises(NoHandlerFoundError):
            processor.process_command(Namespace())

    def test_get_handler_for_command(self, processor, handler):
        assert processor.get_handler_for_command("alpha") is handler
        assert processor.get_handler_for_command(None) is None


class TestErrorPropagation:
    """Test how handler failures surface."""

    def test_domain_errors_pass_through(self, console):
        """SpulError subclasses are re-raised unchanged."""
        handler = RecordingHandler(error=ConfigurationError("bad budget"))
        processor = CommandProcessor([handler], console)

        with pytest.raises(ConfigurationError, match="bad budget"):
            processor.process_command(Namespace(command="alpha"))

    def test_unexpected_errors_wrapped(self, console):
        handler = RecordingHandler(error=RuntimeError("boom"))
        processor = CommandProcessor([handler], console)

        with pytest.raises(CommandProcessingError) as excinfo:
            processor.process_command(Namespace(command="alpha"))

        assert "boom" in str(excinfo.value)
        assert isinstance(excinfo.value.__cause__, RuntimeError)
