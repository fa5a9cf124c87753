"""Exception types shared by every module of the package."""

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)
INT128_MAX = 2**127 - 1
INT128_MIN = -(2**127)


class OrthoError(Exception):
    """Base class for all library errors."""


class IntegerOverflow(OrthoError, ArithmeticError):
    """An intermediate value left the signed 64-bit range."""


class DimensionMismatch(OrthoError, ValueError):
    pass


class NotOrthogonal(OrthoError, ValueError):
    def __init__(self, i: int, j: int, dot: int):
        self.i, self.j, self.dot = i, j, dot
        super().__init__(f"vectors {i} and {j} are not orthogonal (dot = {dot})")


class NormMismatch(OrthoError, ValueError):
    def __init__(self, i: int, norm: int, expected: int):
        self.i, self.norm, self.expected = i, norm, expected
        super().__init__(f"vector {i} has squared norm {norm}, expected {expected}")


class NotPerfectSquareNorm(OrthoError, ValueError):
    pass


class NotPrimitive(OrthoError, ValueError):
    pass


class InvalidInput(OrthoError, ValueError):
    """Generic precondition violation (zero vector, bad index, bad V0, ...)."""


class BudgetExceeded(OrthoError):
    """A search was asked to go beyond its configured size cap."""


class InternalFailure(OrthoError, AssertionError):
    """A proved statement was contradicted at runtime.

    Raising this always indicates a bug in the library, never bad user input.
    """


def checked_wide(x: int) -> int:
    """Range check for a double-width (128-bit) intermediate."""
    if x > INT128_MAX or x < INT128_MIN:
        raise IntegerOverflow(f"intermediate {x} does not fit in a signed 128-bit integer")
    return x


def checked(x: int) -> int:
    if x > INT64_MAX or x < INT64_MIN:
        raise IntegerOverflow(f"value {x} does not fit in a signed 64-bit integer")
    return x
