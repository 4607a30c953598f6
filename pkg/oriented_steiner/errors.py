# oriented_steiner/errors.py - Exception hierarchy for the oriented Steiner toolkit
from typing import Optional, Tuple


class OrientedSteinerError(Exception):
    """Base class for every error raised by this package"""


class AdmissibilityError(OrientedSteinerError, ValueError):
    """No Steiner triple system exists on the requested number of points"""

    def __init__(self, n: int):
        self.n = n
        super().__init__(
            f"n={n} is not admissible: a Steiner triple system on n points "
            f"exists only for n ≡ 1 or 3 (mod 6) with n ≥ 3"
        )


class LengthError(OrientedSteinerError, ValueError):
    pass


class RangeError(OrientedSteinerError, IndexError):
    pass


class DiagonalError(OrientedSteinerError, ValueError):
    pass


class ValidationError(OrientedSteinerError, ValueError):
    """A structure failed validation; carries the reported violations"""

    def __init__(self, message: str, violations: Tuple[str, ...] = ()):
        self.violations = tuple(violations)
        super().__init__(message)


class NotSteinerError(OrientedSteinerError, ValueError):
    def __init__(self, condition: str, witness: Tuple[int, ...], detail: str):
        self.condition = condition
        self.witness = witness
        super().__init__(f"not a Steiner quasigroup ({condition}): {detail}")


class SizeMismatchError(OrientedSteinerError, ValueError):
    pass


class DimensionError(OrientedSteinerError, ValueError):
    pass


class NotPermutationError(OrientedSteinerError, ValueError):
    pass


class NotAutomorphismError(OrientedSteinerError, ValueError):
    def __init__(self, message: str, element: Optional[int] = None):
        self.element = element
        super().__init__(message)


class NotInvolutoryError(OrientedSteinerError, ValueError):
    pass


class NotLatinError(OrientedSteinerError, ValueError):
    pass


class IntegrityError(OrientedSteinerError):
    def __init__(self, position: int, expected: int, recovered: int):
        self.position = position
        self.expected = expected
        self.recovered = recovered
        super().__init__(
            f"integrity check failed at position {position}: "
            f"recovered k={recovered}, expected k={expected}"
        )


class FormatError(OrientedSteinerError, ValueError):
    """Malformed text input; line is 1-based"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")
