"""
Reduction module for the SPUL toolkit.
CNF satisfiability reduces to the existence of a rainbow s-t path.
"""

from .instance import Assignment, SatInstance, random_instance
from .encoder import (
    ReductionMap,
    chain_label,
    decode,
    decode_named_path,
    encode,
    rainbow_iff_sat,
)

__all__ = [
    "Assignment",
    "ReductionMap",
    "SatInstance",
    "chain_label",
    "decode",
    "decode_named_path",
    "encode",
    "rainbow_iff_sat",
    "random_instance",
]
