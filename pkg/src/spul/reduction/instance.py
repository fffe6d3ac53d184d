"""
CNF formulas over variables x_1..x_n.

Literals are signed DIMACS integers: +j is x_j, -j is the negation of x_j.
"""

import random
from dataclasses import dataclass
from typing import Sequence, Tuple

from ..utils.exceptions import ReductionError

Clause = Tuple[int, ...]
Assignment = Tuple[bool, ...]


def literal_variable(literal: int) -> int:
    return abs(literal)


def literal_positive(literal: int) -> bool:
    return literal > 0


@dataclass(frozen=True)
class SatInstance:
    """
    A CNF formula. Clauses may have any width >= 1; the clause list may be
    empty, which is trivially satisfiable.
    """

    num_variables: int
    clauses: Tuple[Clause, ...] = ()

    def __post_init__(self):
        if self.num_variables < 0:
            raise ReductionError("number of variables must be nonnegative")
        normalized = tuple(tuple(clause) for clause in self.clauses)
        object.__setattr__(self, "clauses", normalized)
        for index, clause in enumerate(normalized, start=1):
            if not clause:
                raise ReductionError(f"clause {index} is empty")
            for literal in clause:
                if literal == 0 or abs(literal) > self.num_variables:
                    raise ReductionError(
                        f"clause {index}: literal {literal} out of range "
                        f"1..{self.num_variables}"
                    )

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def is_satisfied_by(self, assignment: Sequence[bool]) -> bool:
        """Evaluate the formula; assignment[j - 1] is the value of x_j."""
        if len(assignment) != self.num_variables:
            raise ReductionError(
                f"assignment has {len(assignment)} values, "
                f"expected {self.num_variables}"
            )
        return all(
            any(assignment[abs(lit) - 1] == literal_positive(lit) for lit in clause)
            for clause in self.clauses
        )


def random_instance(
    rng: random.Random, max_variables: int, max_clauses: int, max_width: int = 3
) -> SatInstance:
    """Draw a random CNF with 1..max_variables variables and 0..max_clauses clauses."""
    num_variables = rng.randint(1, max_variables)
    clauses = []
    for _ in range(rng.randint(0, max_clauses)):
        width = rng.randint(1, max_width)
        clauses.append(
            tuple(
                rng.randint(1, num_variables) * rng.choice((1, -1))
                for _ in range(width)
            )
        )
    return SatInstance(num_variables=num_variables, clauses=tuple(clauses))
