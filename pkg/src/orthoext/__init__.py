"""Exact construction of equal-norm orthogonal extensions of integer vectors."""

from .completion import (
    CompletionResult,
    Reason,
    Status,
    codim1_complete,
    complete,
    complete_d3,
    complete_d4,
    extend_blocks,
    obstruction_d4kplus2,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    IntegerOverflow,
    InternalFailure,
    InvalidInput,
    NormMismatch,
    NotOrthogonal,
    NotPerfectSquareNorm,
    NotPrimitive,
    OrthoError,
)
from .intvec import IntMatrix, IntVector, OrthoSet, dot, vec, verify_ortho_set

__version__ = "0.1.0"
