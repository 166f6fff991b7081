"""Tangent cones of monomial curves in affine 4-space."""

from .errors import (BudgetExceeded, InvalidGenerators, InvariantViolation,
                     PreconditionError, TableRangeError, TableTooLarge, TangentConeError)
from .semigroup import (GeneratorTuple, MembershipTables, apery_set, build_tables,
                        factorizations, frobenius, is_symmetric)
from .binomials import Binomial

__version__ = "0.1.0"
