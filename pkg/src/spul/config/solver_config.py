"""
Solver configuration built from command-line flags.
"""

import logging
from argparse import Namespace
from dataclasses import dataclass, field

from ..io.result_file import RESULT_FORMATS
from ..search.results import SearchBudget
from ..search.solver import ALGORITHMS
from ..utils.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

DEFAULT_ALGORITHM = "a"
DEFAULT_FORMAT = "tsv"
DEFAULT_WORKERS = 1


@dataclass(frozen=True)
class SolverConfig:
    algorithm: str = DEFAULT_ALGORITHM
    use_preprocess: bool = False
    budget: SearchBudget = field(default_factory=SearchBudget.unlimited)
    output_format: str = DEFAULT_FORMAT
    workers: int = DEFAULT_WORKERS

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ConfigurationError(
                f"unknown algorithm '{self.algorithm}', expected one of: "
                f"{', '.join(ALGORITHMS)}"
            )
        if self.output_format not in RESULT_FORMATS:
            raise ConfigurationError(
                f"unknown output format '{self.output_format}', expected one of: "
                f"{', '.join(RESULT_FORMATS)}"
            )
        if self.workers < 1:
            raise ConfigurationError(f"workers must be positive, got {self.workers}")


def create_solver_config(args: Namespace) -> SolverConfig:
    """
    Factory function to build a SolverConfig from parsed arguments.

    Flags a subcommand does not define fall back to the defaults.

    Raises:
        ConfigurationError: on an invalid algorithm, format, budget or worker count
    """
    config = SolverConfig(
        algorithm=str(getattr(args, "algorithm", DEFAULT_ALGORITHM)).lower(),
        use_preprocess=bool(getattr(args, "preprocess", False)),
        budget=SearchBudget(
            max_tree_nodes=getattr(args, "max_nodes", None),
            max_queue_entries=getattr(args, "max_queue", None),
        ),
        output_format=getattr(args, "format", DEFAULT_FORMAT),
        workers=getattr(args, "workers", DEFAULT_WORKERS),
    )
    logger.debug(f"Solver configuration: {config}")
    return config
