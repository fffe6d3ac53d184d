"""
Brute-force satisfiability for small CNF formulas.
"""

import itertools
import logging
from typing import Optional

from ..reduction.instance import Assignment, SatInstance
from ..utils.exceptions import OracleLimitError

logger = logging.getLogger(__name__)

MAX_SAT_VARIABLES = 20


def sat_brute_force(
    instance: SatInstance, max_variables: int = MAX_SAT_VARIABLES
) -> Optional[Assignment]:
    """
    Try all 2^n assignments in lexicographic order (false < true, x_1 most
    significant) and return the first satisfying one.

    Raises:
        OracleLimitError: if the formula has more than `max_variables` variables
    """
    if instance.num_variables > max_variables:
        raise OracleLimitError("variables", instance.num_variables, max_variables)

    for assignment in itertools.product((False, True), repeat=instance.num_variables):
        if instance.is_satisfied_by(assignment):
            return assignment
    logger.debug(
        f"No satisfying assignment among {2 ** instance.num_variables} candidates"
    )
    return None


def check_assignment(instance: SatInstance, assignment: Assignment) -> bool:
    return instance.is_satisfied_by(assignment)
