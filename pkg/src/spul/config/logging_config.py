"""
Logging Configuration for the SPUL toolkit.
Centralized logging setup with color coding and optional file logging.
"""

import logging
import sys
import warnings
from datetime import datetime
from pathlib import Path
from typing import Optional

DETAILED_FORMAT = (
    "%(asctime)s | %(levelname)-8s | %(name)-20s | "
    "%(funcName)-15s:%(lineno)-4d | %(message)s"
)
SIMPLE_FORMAT = "%(levelname)s | %(name)s | %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


class ANSIColors:
    """ANSI color codes for terminal output."""

    RESET = "\033[0m"
    BOLD = "\033[1m"
    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    BLUE = "\033[34m"


class ColoredFormatter(logging.Formatter):
    """Formatter that colors whole lines by level when writing to a terminal."""

    LEVEL_COLORS = {
        "DEBUG": ANSIColors.GREEN,
        "INFO": ANSIColors.BLUE,
        "WARNING": ANSIColors.YELLOW,
        "ERROR": ANSIColors.RED,
        "CRITICAL": ANSIColors.BOLD + ANSIColors.RED,
    }

    def __init__(self, *args, stream=None, **kwargs):
        super().__init__(*args, **kwargs)
        stream = stream if stream is not None else sys.stderr
        self.use_colors = hasattr(stream, "isatty") and stream.isatty()

    def format(self, record):
        message = super().format(record)
        if not self.use_colors:
            return message
        color = self.LEVEL_COLORS.get(record.levelname, "")
        if color:
            return f"{color}{message}{ANSIColors.RESET}"
        return message


def setup_logging(
    verbose: bool = False, log_dir: Optional[Path] = None
) -> Optional[Path]:
    """
    Configure logging based on verbosity level.

    Args:
        verbose: DEBUG level with the detailed format; otherwise WARNING with
            the simple one
        log_dir: if given, also write every record to log_<timestamp>.txt there

    Returns:
        Path of the log file, or None when logging to the console only
    """
    level = logging.DEBUG if verbose else logging.WARNING

    # stdout carries result data
    stream = sys.stderr
    formatter = ColoredFormatter(
        fmt=DETAILED_FORMAT if verbose else SIMPLE_FORMAT,
        datefmt=DATE_FORMAT,
        stream=stream,
    )

    root_logger = logging.getLogger()
    root_logger.setLevel(level)
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    console_handler = logging.StreamHandler(stream)
    console_handler.setLevel(level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    log_file = None
    if log_dir is not None:
        log_dir = Path(log_dir)
        log_dir.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        log_file = log_dir / f"log_{timestamp}.txt"

        file_handler = logging.FileHandler(filename=log_file, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(
            logging.Formatter(fmt=DETAILED_FORMAT, datefmt=DATE_FORMAT)
        )
        root_logger.addHandler(file_handler)
        # the file captures everything regardless of console verbosity
        root_logger.setLevel(logging.DEBUG)
        logging.getLogger(__name__).info(f"Logging to file: {log_file}")

    _configure_library_loggers(verbose)
    _configure_app_loggers(logging.DEBUG if log_file is not None else level)
    _configure_warnings(verbose)
    return log_file


def _configure_library_loggers(verbose: bool):
    """Configure logging for third-party libraries."""
    library_configs = {
        "networkx": logging.WARNING,
        "asyncio": logging.WARNING if not verbose else logging.INFO,
    }
    for library, level in library_configs.items():
        logging.getLogger(library).setLevel(level)


def _configure_app_loggers(level: int):
    """Configure application-specific loggers."""
    for logger_name in ["spul"]:
        logging.getLogger(logger_name).setLevel(level)


def _configure_warnings(verbose: bool):
    """Configure Python warnings."""
    if not verbose:
        warnings.filterwarnings("ignore", category=DeprecationWarning)
    logging.captureWarnings(True)
    logging.getLogger("py.warnings").setLevel(
        logging.WARNING if not verbose else logging.DEBUG
    )
