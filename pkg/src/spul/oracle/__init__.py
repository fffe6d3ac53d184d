"""
Oracle module for the SPUL toolkit.
Deliberately naive ground truth for small instances.
"""

from .matching import sdr_matching
from .rainbow import OracleLimits, RainbowCount, enumerate_rainbow
from .sat import MAX_SAT_VARIABLES, check_assignment, sat_brute_force

__all__ = [
    "MAX_SAT_VARIABLES",
    "OracleLimits",
    "RainbowCount",
    "check_assignment",
    "enumerate_rainbow",
    "sat_brute_force",
    "sdr_matching",
]
